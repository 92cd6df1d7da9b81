#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgm/laurent.hpp"
#include "lgm/polytope.hpp"
#include "lgm/series.hpp"

namespace lgm {

struct CompleteIntersection {
  int ambient_dim = 0;
  std::vector<int> degrees;
};

struct WeightedHypersurface {
  std::vector<int> weights;
  int degree = 0;
  std::vector<int> partition;
};

struct ReferenceSeries {
  IntegerSeries coeffs;
  std::string provenance;  // "published" or "derived"
};

/// One corpus entry: a weak Landau-Ginzburg model in the variables
/// x, y, z.
struct FanoEntry {
  int id = 0;
  int fano_index = 0;
  Integer degree;  // (-K)^3, fully multiplied out
  std::string description;
  std::string polynomial;
  std::vector<std::string> alternates;
  std::optional<ReferenceSeries> reference_series;
  std::optional<CompleteIntersection> ci;
  std::optional<WeightedHypersurface> weighted;
};

inline constexpr std::size_t kCorpusSize = 17;

/// Variable order used for every corpus polynomial.
const std::vector<std::string>& corpus_variables();

LaurentPolynomial entry_polynomial(const FanoEntry& e);
LaurentPolynomial alternate_polynomial(const FanoEntry& e, std::size_t i);

/// The embedded corpus, entries in id order.
const std::vector<FanoEntry>& builtin_corpus();

/// Parses and validates a corpus document. Throws SchemaError naming the
/// entry id and field on any violation, including a missing id.
std::vector<FanoEntry> parse_corpus(std::string_view json_text);

/// Reads a corpus file (IoError if unreadable), then parse_corpus.
std::vector<FanoEntry> load_corpus(const std::string& path);

/// Throws InvalidArgument if no entry has this id.
const FanoEntry& find_entry(const std::vector<FanoEntry>& corpus, int id);

struct AlternateCheck {
  std::string polynomial;
  IntegerSeries series;
  MatchReport match;
};

/// Outcome of checking one entry. Series comparisons are made after
/// removing the constant term of the polynomial (the shift f -> f - ct(f)),
/// which on the series side is normalize_shift.
struct VerificationReport {
  int id = 0;
  std::size_t terms = 0;
  IntegerSeries series;                      // Phi of the stored polynomial
  std::optional<MatchReport> reference;      // against reference_series
  std::optional<MatchReport> closed_form;    // against ci_period_closed_form
  std::vector<AlternateCheck> alternates;    // each alternate against the entry
  SemiweakReport semiweak;
  bool origin_interior = false;

  bool passed() const;
};

/// Throws InvalidArgument for terms < 6.
VerificationReport verify_entry(const FanoEntry& e, std::size_t terms);

/// Verifies entries concurrently; the result is in input order.
std::vector<VerificationReport> verify_all(const std::vector<FanoEntry>& corpus, std::size_t terms);

}  // namespace lgm
