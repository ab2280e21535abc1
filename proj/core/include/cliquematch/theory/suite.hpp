#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cliquematch::theory {

struct ValidationRow {
  std::string validator;
  std::string param_set;
  std::string statistic;
  double value = 0.0;
  /// NaN when the validator only reports a measurement.
  double bound = 0.0;
  bool ok = true;
};

/// trace_qap, spread_gaps, finke, spread_concentration, lawler, talagrand,
/// clique_counts, clique_poisson, ratio_bound.
const std::vector<std::string>& validator_names();

/// Runs one validator at its default desk-scale parameters and returns its
/// summary row. Throws ArgumentError for an unknown name.
ValidationRow run_validator(const std::string& name, std::uint64_t seed);

/// Names may include "all". Rows come back in validator_names() order with
/// duplicates removed.
std::vector<ValidationRow> run_validators(const std::vector<std::string>& selection, std::uint64_t seed);

/// Header `validator,param_set,statistic,value,bound,ok`; NaN bounds print as
/// an empty field.
void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows);

}  // namespace cliquematch::theory
