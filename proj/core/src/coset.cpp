#include "maxsym/coset.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxsym {

struct CosetTableBuilder {
  static CosetTable build(std::int64_t rows, int generators, std::vector<std::int32_t> entries) {
    CosetTable table;
    table.rows_ = rows;
    table.generators_ = generators;
    table.entries_ = std::move(entries);
    return table;
  }
};

namespace {

constexpr std::int32_t kUndefined = -1;

// Column layout: generator g forward at 2g, inverse at 2g+1.
int column(const Letter& l) { return 2 * l.generator + (l.exponent < 0 ? 1 : 0); }
int inverse_column(int col) { return col ^ 1; }

struct BudgetHit {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, std::int64_t budget)
      : cols_(2 * p.generator_count()), budget_(budget) {
    for (const Word& rel : p.relators) relators_.push_back(to_columns(rel));
    for (const Word& gen : subgroup) subgroup_words_.push_back(to_columns(gen));
  }

  EnumerationResult run() {
    EnumerationResult result;
    result.budget = budget_;
    try {
      define_first();
      for (const auto& w : subgroup_words_) scan_and_fill(0, w);
      for (std::int64_t current = 0; current < total_; ++current) {
        if (dead(current)) continue;
        for (const auto& rel : relators_) {
          scan_and_fill(current, rel);
          if (dead(current)) break;
        }
        if (dead(current)) continue;
        for (int col = 0; col < cols_; ++col)
          if (at(current, col) == kUndefined) define(current, col);
      }
    } catch (const BudgetHit&) {
      result.status = EnumerationResult::Status::Exceeded;
      result.stats = stats();
      return result;
    }
    result.status = EnumerationResult::Status::Completed;
    result.index = live_;
    result.table = compact();
    result.stats = stats();
    return result;
  }

 private:
  std::vector<int> to_columns(const Word& w) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (const Letter& l : w) cols.push_back(column(l));
    return cols;
  }

  EnumerationStats stats() const { return {peak_live_, total_}; }

  std::int32_t& at(std::int64_t coset, int col) { return entries_[coset * cols_ + col]; }
  std::int32_t at(std::int64_t coset, int col) const { return entries_[coset * cols_ + col]; }

  bool dead(std::int64_t coset) const { return parent_[coset] != coset; }

  std::int64_t rep(std::int64_t coset) {
    std::int64_t root = coset;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[coset] != root) {
      std::int64_t next = parent_[coset];
      parent_[coset] = static_cast<std::int32_t>(root);
      coset = next;
    }
    return root;
  }

  void define_first() {
    total_ = 1;
    live_ = 1;
    peak_live_ = 1;
    parent_.push_back(0);
    entries_.assign(static_cast<size_t>(cols_), kUndefined);
  }

  std::int64_t new_coset() {
    if (live_ == budget_) throw BudgetHit{};
    std::int64_t id = total_++;
    ++live_;
    peak_live_ = std::max(peak_live_, live_);
    parent_.push_back(static_cast<std::int32_t>(id));
    entries_.resize(entries_.size() + static_cast<size_t>(cols_), kUndefined);
    return id;
  }

  std::int64_t define(std::int64_t coset, int col) {
    std::int64_t fresh = new_coset();
    at(coset, col) = static_cast<std::int32_t>(fresh);
    at(fresh, inverse_column(col)) = static_cast<std::int32_t>(coset);
    return fresh;
  }

  void merge(std::int64_t a, std::int64_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    std::int64_t survivor = std::min(a, b);
    std::int64_t dying = std::max(a, b);
    parent_[dying] = static_cast<std::int32_t>(survivor);
    --live_;
    merge_queue_.push_back(dying);
  }

  // Classic immediate coincidence processing: replay the dead coset's row
  // into its representative, queueing any secondary coincidences.
  void coincidence(std::int64_t a, std::int64_t b) {
    merge(a, b);
    while (queue_head_ < merge_queue_.size()) {
      std::int64_t gamma = merge_queue_[queue_head_++];
      for (int col = 0; col < cols_; ++col) {
        std::int32_t delta = at(gamma, col);
        if (delta == kUndefined) continue;
        at(delta, inverse_column(col)) = kUndefined;
        std::int64_t mu = rep(gamma);
        std::int64_t nu = rep(delta);
        if (at(mu, col) != kUndefined)
          merge(nu, at(mu, col));
        else if (at(nu, inverse_column(col)) != kUndefined)
          merge(mu, at(nu, inverse_column(col)));
        else {
          at(mu, col) = static_cast<std::int32_t>(nu);
          at(nu, inverse_column(col)) = static_cast<std::int32_t>(mu);
        }
      }
    }
    merge_queue_.clear();
    queue_head_ = 0;
  }

  void scan_and_fill(std::int64_t start, const std::vector<int>& cols) {
    std::int64_t front = start;
    std::int64_t back = start;
    size_t i = 0;
    size_t j = cols.size();  // letters [i, j) remain
    while (true) {
      while (i < j && at(front, cols[i]) != kUndefined) front = at(front, cols[i++]);
      if (i == j) {
        if (front != back) coincidence(front, back);
        return;
      }
      while (j > i && at(back, inverse_column(cols[j - 1])) != kUndefined)
        back = at(back, inverse_column(cols[--j]));
      if (j == i) {
        coincidence(front, back);
        return;
      }
      if (j == i + 1) {
        at(front, cols[i]) = static_cast<std::int32_t>(back);
        at(back, inverse_column(cols[i])) = static_cast<std::int32_t>(front);
        return;
      }
      front = define(front, cols[i++]);
    }
  }

  // Renumbers live cosets in discovery order.
  CosetTable compact() {
    std::vector<std::int32_t> new_id(static_cast<size_t>(total_), kUndefined);
    std::int64_t next = 0;
    for (std::int64_t c = 0; c < total_; ++c)
      if (!dead(c)) new_id[c] = static_cast<std::int32_t>(next++);

    std::vector<std::int32_t> compacted(static_cast<size_t>(next) * cols_, kUndefined);
    for (std::int64_t c = 0; c < total_; ++c) {
      if (dead(c)) continue;
      for (int col = 0; col < cols_; ++col) {
        std::int32_t target = at(c, col);
        if (target == kUndefined) throw std::logic_error("enumerate_cosets: incomplete table after closure");
        compacted[static_cast<size_t>(new_id[c]) * cols_ + col] = new_id[rep(target)];
      }
    }
    return CosetTableBuilder::build(next, cols_ / 2, std::move(compacted));
  }

  int cols_;
  std::int64_t budget_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_words_;

  std::vector<std::int32_t> entries_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int64_t> merge_queue_;
  size_t queue_head_ = 0;
  std::int64_t total_ = 0;
  std::int64_t live_ = 0;
  std::int64_t peak_live_ = 0;
};

}  // namespace

std::int64_t CosetTable::entry(std::int64_t coset, int generator, int exponent) const {
  if (coset < 0 || coset >= rows_) throw std::out_of_range("CosetTable: coset out of range");
  if (generator < 0 || generator >= generators_) throw std::out_of_range("CosetTable: generator out of range");
  int col = 2 * generator + (exponent < 0 ? 1 : 0);
  return entries_[static_cast<size_t>(coset) * (2 * generators_) + col];
}

std::int64_t CosetTable::trace(std::int64_t coset, const Word& w) const {
  for (const Letter& l : w) coset = entry(coset, l.generator, l.exponent);
  return coset;
}

std::string CosetTable::dump(const std::vector<std::string>& generator_names) const {
  if (static_cast<int>(generator_names.size()) != generators_)
    throw std::invalid_argument("CosetTable::dump: name count mismatch");
  std::string out;
  for (std::int64_t c = 0; c < rows_; ++c)
    for (int g = 0; g < generators_; ++g) {
      out += std::to_string(c);
      out += ' ';
      out += generator_names[g];
      out += " -> ";
      out += std::to_string(entry(c, g, 1));
      out += '\n';
    }
  return out;
}

void CosetTable::check(const Presentation& p, const std::vector<Word>& subgroup_generators) const {
  if (p.generator_count() != generators_) throw std::logic_error("CosetTable::check: presentation mismatch");
  for (std::int64_t c = 0; c < rows_; ++c)
    for (int g = 0; g < generators_; ++g)
      for (int e : {1, -1}) {
        std::int64_t d = entry(c, g, e);
        if (d < 0 || d >= rows_) throw std::logic_error("CosetTable::check: open or out-of-range entry");
        if (entry(d, g, -e) != c) throw std::logic_error("CosetTable::check: inverse inconsistency");
      }
  for (std::int64_t c = 0; c < rows_; ++c)
    for (const Word& rel : p.relators)
      if (trace(c, rel) != c) throw std::logic_error("CosetTable::check: relator does not close");
  for (const Word& w : subgroup_generators)
    if (trace(0, w) != 0) throw std::logic_error("CosetTable::check: subgroup generator moves coset 0");

  std::vector<bool> reached(static_cast<size_t>(rows_), false);
  std::vector<std::int64_t> frontier{0};
  reached[0] = true;
  while (!frontier.empty()) {
    std::int64_t c = frontier.back();
    frontier.pop_back();
    for (int g = 0; g < generators_; ++g)
      for (int e : {1, -1}) {
        std::int64_t d = entry(c, g, e);
        if (!reached[static_cast<size_t>(d)]) {
          reached[static_cast<size_t>(d)] = true;
          frontier.push_back(d);
        }
      }
  }
  if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
    throw std::logic_error("CosetTable::check: action not transitive from coset 0");
}

EnumerationResult enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup,
                                   std::int64_t budget) {
  if (budget < 1) throw std::invalid_argument("enumerate_cosets: budget must be >= 1");
  p.validate();
  for (const Word& w : subgroup)
    for (const Letter& l : w) {
      if (l.generator < 0 || l.generator >= p.generator_count())
        throw std::invalid_argument("enumerate_cosets: subgroup word out of range");
      if (l.exponent != 1 && l.exponent != -1)
        throw std::invalid_argument("enumerate_cosets: subgroup letter exponent must be +1 or -1");
    }
  Enumerator engine(p, subgroup, budget);
  return engine.run();
}

EnumerationResult group_order(const Presentation& p, std::int64_t budget) {
  return enumerate_cosets(p, {}, budget);
}

EnumerationResult subgroup_index(const Presentation& p, const std::vector<Word>& subgroup,
                                 std::int64_t budget) {
  return enumerate_cosets(p, subgroup, budget);
}

}  // namespace maxsym
