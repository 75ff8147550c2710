// Copyright 2026 The vdp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VDP_CALIBRATION_HPP_
#define VDP_CALIBRATION_HPP_

#include <map>
#include <string>
#include <vector>

namespace vdp {

// Named per-task parameter bundle loaded from a calibration file.
//
// File format: `task = <name>` at top level, then `[section]` headers with
// `key = value` lines; `#` starts a comment.  Every key in the documented
// schema must be present (missing keys fail the load, naming the key);
// unknown keys are kept and produce a warning.
class CalibrationSet {
 public:
  static CalibrationSet load(const std::string& path);

  // Builds a set from already-parsed values; validates the schema.
  static CalibrationSet from_values(
      std::string task_name,
      std::map<std::string, std::map<std::string, double>> sections);

  const std::string& task_name() const { return task_name_; }

  // Throws ConfigError naming "<section>.<key>" when absent.
  double get(const std::string& section, const std::string& key) const;
  bool has(const std::string& section, const std::string& key) const;

  // The documented schema, as "<section>.<key>" strings.
  static const std::vector<std::string>& required_keys();

 private:
  std::string task_name_;
  std::map<std::string, std::map<std::string, double>> sections_;
};

}  // namespace vdp

#endif  // VDP_CALIBRATION_HPP_
