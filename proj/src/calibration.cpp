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

#include "vdp/calibration.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "vdp/errors.hpp"

namespace vdp {
namespace {

const std::set<std::string> kKnownTasks = {"quality", "side-by-side", "flicker",
                                           "detection", "civdm"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<std::string>& CalibrationSet::required_keys() {
  static const std::vector<std::string> keys = {
      // Contrast sensitivity parameterization.
      "csf_params.peak_sensitivity",
      "csf_params.peak_frequency",
      "csf_params.peak_frequency_shift",
      "csf_params.peak_frequency_half_lum",
      "csf_params.low_freq_rolloff",
      "csf_params.low_freq_sigma",
      "csf_params.high_freq_sigma",
      "csf_params.lum_half",
      "csf_params.lum_exponent",
      // Eye optics and retinal pathway.
      "optics_params.adaptation_sigma_deg",
      "optics_params.response_floor",
      "optics_params.reference_age",
      "optics_params.mtf_weight_1",
      "optics_params.mtf_scale_1",
      "optics_params.mtf_weight_2",
      "optics_params.mtf_scale_2",
      "optics_params.cie99_pigmentation",
      // Band decomposition.
      "pyramid_params.orientation_count",
      "pyramid_params.min_peak_cpd",
      // Contrast masking transducer and activity pooling.
      "masking_params.transducer_p",
      "masking_params.transducer_q",
      "masking_params.transducer_gamma",
      "masking_params.transducer_sigma",
      "masking_params.weight_self",
      "masking_params.weight_orientation",
      "masking_params.weight_scale",
      "masking_params.pool_sigma_px",
      "masking_params.mutual_masking",
      // Head pooling.
      "pooling_params.quality_exponent",
      "pooling_params.band_weight",
      "pooling_params.detection_pool",
      // Psychometric function.
      "psychometric_params.alpha",
      "psychometric_params.beta",
      // JOD regression.
      "jod_regression.log_a",
      "jod_regression.log_b",
  };
  return keys;
}

CalibrationSet CalibrationSet::from_values(
    std::string task_name, std::map<std::string, std::map<std::string, double>> sections) {
  if (!kKnownTasks.count(task_name))
    throw ConfigError("calibration: unknown task name \"" + task_name + "\"");

  std::set<std::string> known(required_keys().begin(), required_keys().end());
  for (const auto& [section, kv] : sections) {
    for (const auto& [key, value] : kv) {
      const std::string full = section + "." + key;
      if (!known.count(full))
        fprintf(stderr, "warning: calibration key \"%s\" is not recognized; keeping it\n",
                full.c_str());
    }
  }
  for (const auto& full : required_keys()) {
    const auto dot = full.find('.');
    const std::string section = full.substr(0, dot), key = full.substr(dot + 1);
    auto sit = sections.find(section);
    if (sit == sections.end() || !sit->second.count(key))
      throw ConfigError("calibration file missing key: " + full);
  }

  CalibrationSet set;
  set.task_name_ = std::move(task_name);
  set.sections_ = std::move(sections);
  return set;
}

CalibrationSet CalibrationSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open calibration file: " + path);

  std::string task_name;
  std::map<std::string, std::map<std::string, double>> sections;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("calibration " + path + ":" + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("calibration " + path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (section.empty()) {
      if (key == "task") {
        task_name = value;
        continue;
      }
      throw ConfigError("calibration " + path + ":" + std::to_string(lineno) +
                        ": key \"" + key + "\" outside any section");
    }

    size_t consumed = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != value.size())
      throw ConfigError("calibration " + path + ":" + std::to_string(lineno) +
                        ": malformed number \"" + value + "\" for " + section + "." + key);
    sections[section][key] = parsed;
  }

  if (task_name.empty()) throw ConfigError("calibration file lacks a task name: " + path);
  return from_values(std::move(task_name), std::move(sections));
}

double CalibrationSet::get(const std::string& section, const std::string& key) const {
  auto sit = sections_.find(section);
  if (sit != sections_.end()) {
    auto kit = sit->second.find(key);
    if (kit != sit->second.end()) return kit->second;
  }
  throw ConfigError("calibration parameter not found: " + section + "." + key);
}

bool CalibrationSet::has(const std::string& section, const std::string& key) const {
  auto sit = sections_.find(section);
  return sit != sections_.end() && sit->second.count(key) > 0;
}

}  // namespace vdp
