#include "yf/universe.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "yf/lattice.hpp"

namespace yf {

std::uint64_t universe_size(std::size_t max_rank) { return fibonacci(max_rank + 3) - 1; }

namespace kernels {

std::vector<Bitset> down_sets_by_leq(const std::vector<Word>& words) {
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  std::vector<Bitset> rows(words.size(), Bitset(words.size()));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t y = 0; y < n; ++y) {
    Bitset& row = rows[static_cast<std::size_t>(y)];
    for (std::ptrdiff_t x = 0; x < n; ++x) {
      if (yf::leq(words[static_cast<std::size_t>(x)], words[static_cast<std::size_t>(y)])) {
        row.set(static_cast<std::size_t>(x));
      }
    }
  }
  return rows;
}

std::vector<Bitset> down_sets_by_leq_serial(const std::vector<Word>& words) {
  std::vector<Bitset> rows(words.size(), Bitset(words.size()));
  for (std::size_t y = 0; y < words.size(); ++y) {
    for (std::size_t x = 0; x < words.size(); ++x) {
      if (yf::leq(words[x], words[y])) rows[y].set(x);
    }
  }
  return rows;
}

std::vector<Bitset> down_sets_by_closure(const std::vector<std::vector<Id>>& down_covers) {
  // Ids are rank-ordered, so every parent row is final before it is read.
  const std::size_t n = down_covers.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t y = 0; y < n; ++y) {
    rows[y].set(y);
    for (Id p : down_covers[y]) rows[y] |= rows[static_cast<std::size_t>(p)];
  }
  return rows;
}

}  // namespace kernels

Universe Universe::build(std::size_t max_rank, std::size_t ceiling, OrderKernel kernel) {
  if (max_rank > ceiling) {
    throw CapacityError("universe of rank " + std::to_string(max_rank) + " has F_" +
                        std::to_string(max_rank + 3) + " - 1 = " +
                        std::to_string(universe_size(max_rank)) +
                        " words, above the configured ceiling rank " + std::to_string(ceiling));
  }
  Universe u;
  u.max_rank_ = max_rank;
  u.rank_offsets_.push_back(0);
  for (std::size_t n = 0; n <= max_rank; ++n) {
    for (Word& w : enumerate_rank(n)) {
      u.words_.push_back(std::move(w));
      u.ranks_.push_back(n);
    }
    u.rank_offsets_.push_back(static_cast<Id>(u.words_.size()));
  }
  for (std::size_t i = 0; i < u.words_.size(); ++i) u.index_.emplace(u.words_[i], static_cast<Id>(i));

  const std::size_t size = u.words_.size();
  u.up_covers_.resize(size);
  u.down_covers_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (const Word& p : parents(u.words_[i])) u.down_covers_[i].push_back(u.index_.at(p));
    std::sort(u.down_covers_[i].begin(), u.down_covers_[i].end());
    if (u.ranks_[i] < max_rank) {
      for (const Word& c : children(u.words_[i])) u.up_covers_[i].push_back(u.index_.at(c));
      std::sort(u.up_covers_[i].begin(), u.up_covers_[i].end());
    }
  }

  u.down_ = kernel == OrderKernel::kParallelLeq ? kernels::down_sets_by_leq(u.words_)
                                                : kernels::down_sets_by_closure(u.down_covers_);
  if (kernel == OrderKernel::kParallelLeq) {
    // Sample check: every 97th row must match the cover closure.
    const auto closure = kernels::down_sets_by_closure(u.down_covers_);
    for (std::size_t y = 0; y < size; y += 97) {
      if (!(closure[y] == u.down_[y])) {
        throw std::logic_error("order matrix disagrees with cover closure at " + u.words_[y].display());
      }
    }
  }
  u.up_.assign(size, Bitset(size));
  for (std::size_t y = 0; y < size; ++y) {
    u.down_[y].for_each([&](std::size_t x) { u.up_[x].set(y); });
  }
  return u;
}

std::optional<Id> Universe::find(const Word& w) const {
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  return std::nullopt;
}

Id Universe::id(const Word& w) const {
  if (auto found = find(w)) return *found;
  throw std::out_of_range("word " + w.display() + " (rank " + std::to_string(rank(w)) +
                          ") is outside U_" + std::to_string(max_rank_));
}

std::string Universe::edge_list() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < words_.size(); ++c) {
    for (Id p : down_covers_[c]) out << words_[c].display() << ' ' << word(p).display() << '\n';
  }
  return out.str();
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Universe& u) : u_(u), image_(u.size(), -1), used_(u.size(), false) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto id = static_cast<Id>(i);
      signature_.emplace_back(u.rank_of(id), u.down_covers(id).size(), u.up_covers(id).size(),
                              u.down_set(id).count(), u.up_set(id).count());
    }
  }

  std::vector<AutoMap> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    // Identity is the lexicographically smallest permutation, so it is first.
    return found_;
  }

 private:
  bool consistent(Id x, Id y) const {
    std::vector<Id> mapped;
    for (Id p : u_.down_covers(x)) mapped.push_back(image_[static_cast<std::size_t>(p)]);
    std::sort(mapped.begin(), mapped.end());
    auto target = u_.down_covers(y);
    return std::equal(mapped.begin(), mapped.end(), target.begin(), target.end());
  }

  void extend(std::size_t x) {
    if (x == u_.size()) {
      found_.push_back(image_);
      return;
    }
    const auto xid = static_cast<Id>(x);
    const std::size_t r = u_.rank_of(xid);
    for (Id y = u_.rank_begin(r); y < u_.rank_end(r); ++y) {
      const auto yi = static_cast<std::size_t>(y);
      if (used_[yi] || signature_[yi] != signature_[x] || !consistent(xid, y)) continue;
      image_[x] = y;
      used_[yi] = true;
      extend(x + 1);
      used_[yi] = false;
      image_[x] = -1;
    }
  }

  using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

  const Universe& u_;
  std::vector<Signature> signature_;
  AutoMap image_;
  std::vector<bool> used_;
  std::vector<AutoMap> found_;
};

}  // namespace

std::vector<AutoMap> automorphisms(const Universe& u) { return AutomorphismSearch(u).run(); }

}  // namespace yf
