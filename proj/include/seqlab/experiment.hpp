#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "seqlab/keyvalue.hpp"

namespace seqlab {

// A reproducible experiment described by a key-value manifest:
//
//   experiment  = kw-demo | prop1-demo | prop2-demo | rates
//   n           = horizon
//   checkpoints = 1024, 4096, ...   (default: powers of two from 2^10, then n)
//   x.*, y.*    = sequence descriptors (see make_source)
//   measure.*   = measure descriptor (see make_measure)
//
// plus per-experiment thresholds documented in the README.
struct ExperimentManifest {
  std::string id;
  std::size_t n = 0;
  std::vector<std::size_t> checkpoints;
  std::string output_dir;
  KeyValueRecord record;

  // Validates the id, n and checkpoints. Throws UsageError.
  static ExperimentManifest from_record(const KeyValueRecord& record);
};

struct Check {
  std::string name;
  bool pass = false;
  std::string value;
  std::string bound;
};

struct ExperimentReport {
  std::vector<Check> checks;
  std::map<std::string, std::string> files;  // file name -> contents

  bool passed() const;
  // "CHECK <name> PASS|FAIL <value> <bound>" per check.
  std::string summary() const;
};

ExperimentReport run_experiment(const ExperimentManifest& manifest);

// Writes every report file plus summary.txt into `dir` (created if needed).
void write_report(const ExperimentReport& report, const std::string& dir);

}  // namespace seqlab
