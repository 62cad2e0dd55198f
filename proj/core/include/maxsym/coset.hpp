#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxsym/presentation.hpp"

namespace maxsym {

// Completed coset table: rows are live cosets 0..size()-1 in discovery
// order (row 0 is the subgroup), columns are generators and inverses, no
// undefined entries.
class CosetTable {
 public:
  CosetTable() = default;

  std::int64_t size() const { return rows_; }
  int generator_count() const { return generators_; }

  std::int64_t entry(std::int64_t coset, int generator, int exponent) const;
  std::int64_t trace(std::int64_t coset, const Word& w) const;

  // Text lines "coset gen -> coset", cosets ascending then generators in
  // presentation order; the stable serialization used by golden tests.
  std::string dump(const std::vector<std::string>& generator_names) const;

  // Verifies the table invariants: closure, g/g^-1 consistency, every
  // relator tracing every coset to itself, every subgroup generator fixing
  // coset 0, and transitivity from coset 0.  Throws std::logic_error.
  void check(const Presentation& p, const std::vector<Word>& subgroup_generators) const;

 private:
  friend struct CosetTableBuilder;

  std::int64_t rows_ = 0;
  int generators_ = 0;
  std::vector<std::int32_t> entries_;  // rows_ x 2*generators_, row-major
};

struct EnumerationStats {
  std::int64_t peak_live = 0;
  std::int64_t total_defined = 0;
};

struct EnumerationResult {
  enum class Status { Completed, Exceeded };

  Status status = Status::Exceeded;
  std::int64_t index = 0;   // when Completed: live cosets == subgroup index
  std::int64_t budget = 0;  // when Exceeded: the exhausted budget (inconclusive, not a proof)
  CosetTable table;         // when Completed
  EnumerationStats stats;

  bool completed() const { return status == Status::Completed; }
};

inline constexpr std::int64_t kDefaultCosetBudget = 1'000'000;

// HLT enumeration with immediate coincidence handling through union-find:
// cosets are scanned in creation order, relators in presentation order,
// rows filled after scanning, coincidences merged to the smaller id.  The
// run is deterministic; the budget caps the number of simultaneously live
// cosets.  Exceeded is inconclusive: infiniteness certificates come from
// geometry, never from the enumerator.
EnumerationResult enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup,
                                   std::int64_t budget);

// Order of the presented group: enumeration over the trivial subgroup.
EnumerationResult group_order(const Presentation& p, std::int64_t budget = kDefaultCosetBudget);

EnumerationResult subgroup_index(const Presentation& p, const std::vector<Word>& subgroup,
                                 std::int64_t budget = kDefaultCosetBudget);

}  // namespace maxsym
