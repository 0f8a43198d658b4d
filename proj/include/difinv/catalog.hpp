#pragma once

#include <optional>
#include <string>
#include <vector>

#include "difinv/execution.hpp"
#include "difinv/halphen.hpp"

namespace difinv {

/// One printed entry of the order-5 catalog. Relative entries are
/// polynomials with their stated index; absolute entries I = N^e / (c a3^d)
/// are power products, so no cube is ever expanded to check them.
struct CatalogEntry {
  Invariant printed;
  std::string printed_text;
  int weight = 0;  // stated weight of the polynomial part (index for relative entries)
  int order = 0;
  DiffPoly base;   // the polynomial part: the entry itself, or N for I-entries
  /// A second reading of a garbled display, tried before the full ansatz.
  std::optional<DiffPoly> alternate;
  std::string alternate_text;
};

/// S0, R0, S1, S2, S3, I0 .. I9, verbatim.
const std::vector<CatalogEntry>& order5_catalog();

enum class GeneratorChoice { Induced, Printed };

std::string_view to_string(GeneratorChoice g);
std::optional<GeneratorChoice> generator_from_string(std::string_view s);

/// The generator, S0 = a3 and mu.
GeneratorContext order5_context(GeneratorChoice g);

enum class RepairRoute {
  None,              // verified as printed
  PrintedSupport,    // ansatz restricted to the printed monomials of the stated weight
  AlternateReading,  // the second reading of the display
  FullSpace,         // unique generator of the full (weight, order) ansatz space
  Ambiguous,         // full space has dimension > 1; basis reported
  Trivial,           // full space is {0}
};

std::string_view to_string(RepairRoute r);

struct EntryReport {
  const CatalogEntry* entry = nullptr;
  Verdict verdict;
  std::optional<Rational> inferred_index;  // relative entries only
  bool isobaric = false;
  RepairRoute route = RepairRoute::None;
  std::optional<Invariant> repaired;
  std::vector<DiffPoly> space_basis;  // full ansatz space, when it was computed
  std::optional<std::size_t> space_dimension;
  std::optional<Rational> scale;  // repaired base = scale * printed base, when so
};

struct CatalogReport {
  GeneratorChoice generator;
  std::vector<EntryReport> entries;
  bool all_verified() const;
  /// Verified or repaired seeds S0, R0, S1, S2, S3; throws VerificationError
  /// when a seed has no unique repair.
  Seeds seeds() const;
  /// The absolute entry under its verified or repaired form.
  Invariant absolute(const std::string& name) const;
};

CatalogReport check_catalog(GeneratorChoice g, Exec exec = Exec::Auto);

/// Seeds for a generator without running the full absolute-entry report.
Seeds verified_seeds(GeneratorChoice g, Exec exec = Exec::Auto);

}  // namespace difinv
