#include "hindman/tree.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "hindman/error.hpp"
#include "hindman/family.hpp"
#include "hindman/fip.hpp"
#include "hindman/oracle.hpp"

namespace hindman {

namespace {

// Candidate children of a node: members of the node's admissible set above
// max(F) whose addition keeps every sum below n.
IntSet child_range(const IntSet& admissible, std::size_t max_f, std::size_t sum_f) {
  const Universe u = admissible.universe();
  const std::size_t hi = sum_f >= u.size() ? 0 : u.size() - sum_f;
  return admissible & IntSet::range(u, max_f + 1, hi);
}

// For a node F of color class A, `admissible` is A cap the intersection of
// A - s over nonzero s in FS(F): exactly the n with FS(F + {n}) \ {0} in A.
// Adding n maps it to admissible cap (admissible - n).
class ExactSearch {
 public:
  ExactSearch(const DivProp& p) : p_(p) {}

  bool good(const IntSet& admissible, std::size_t max_f, std::size_t sum_f, std::size_t height) {
    if (height == 0) return true;
    const IntSet cand = child_range(admissible, max_f, sum_f);
    if (!p_.holds(cand)) return false;
    if (height == 1) return true;

    IntSet possible = cand;
    IntSet kids(cand.universe());
    for (auto m = cand.first(); m; m = cand.next_after(*m)) {
      if (good(admissible & shift(admissible, *m), *m, sum_f + *m, height - 1)) {
        kids.insert(*m);
        if (p_.holds(kids)) return true;
      } else {
        possible.erase(*m);
        if (!p_.holds(possible)) return false;
      }
    }
    return false;
  }

  void collect(const IntSet& admissible, std::vector<std::int64_t>& node, std::size_t sum_f,
               std::size_t height, std::vector<std::vector<std::int64_t>>& out) {
    out.push_back(node);
    if (height == 0) return;
    const std::size_t max_f = node.empty() ? 0 : static_cast<std::size_t>(node.back());
    const IntSet cand = child_range(admissible, max_f, sum_f);
    for (auto m = cand.first(); m; m = cand.next_after(*m)) {
      const IntSet next = admissible & shift(admissible, *m);
      if (!good(next, *m, sum_f + *m, height - 1)) continue;
      node.push_back(static_cast<std::int64_t>(*m));
      collect(next, node, sum_f + *m, height - 1, out);
      node.pop_back();
    }
  }

 private:
  const DivProp& p_;
};

// Follows the star-set construction node by node. Star sets are computed on
// a copy of the admissible set whose top (lost to shifting) is padded back
// in; children are still drawn from the exact admissible set. A child whose
// subtree breaks down is dropped, and the surviving children must still
// satisfy P.
class GuidedSearch {
 public:
  GuidedSearch(const DivProp& p, const LargenessConfig& cfg) : p_(p), cfg_(cfg) {}

  bool grow(const IntSet& admissible, const IntSet& padded, const SetFamily& v,
            std::vector<std::int64_t>& node, std::size_t sum_f, std::size_t height,
            std::vector<std::vector<std::int64_t>>& out) {
    if (height == 0) {
      out.push_back(node);
      return true;
    }
    const StarSet* star = run_star(padded, v, node);
    if (star == nullptr) return false;
    const std::size_t max_f = node.empty() ? 0 : static_cast<std::size_t>(node.back());
    const IntSet kids = child_range(star->branching & admissible, max_f, sum_f);

    IntSet kept(kids.universe());
    std::vector<std::vector<std::int64_t>> below;
    for (auto m = kids.first(); m; m = kids.next_after(*m)) {
      node.push_back(static_cast<std::int64_t>(*m));
      std::vector<std::vector<std::int64_t>> sub;
      if (grow(admissible & shift(admissible, *m), padded & shift_padded(padded, *m), star->family, node,
               sum_f + *m, height - 1, sub)) {
        kept.insert(*m);
        below.insert(below.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
      }
      node.pop_back();
    }
    if (!p_.holds(kept)) {
      if (failure_.empty())
        failure_ = "surviving children below node of size " + std::to_string(node.size()) + " fail " +
                   p_.describe();
      return false;
    }
    out.push_back(node);
    out.insert(out.end(), std::make_move_iterator(below.begin()), std::make_move_iterator(below.end()));
    return true;
  }

  const std::string& failure() const noexcept { return failure_; }

 private:
  using Key = std::pair<IntSet, std::vector<IntSet>>;

  const StarSet* run_star(const IntSet& padded, const SetFamily& v, const std::vector<std::int64_t>& node) {
    Key key{padded, std::vector<IntSet>(v.begin(), v.end())};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::optional<StarSet> star;
      try {
        star = star_set(padded, v, p_, cfg_);
      } catch (const Error& e) {
        if (!is_surrogate_breakdown(e.kind()) && e.kind() != ErrorKind::PreconditionFailed) throw;
        if (failure_.empty())
          failure_ = "star set at node of size " + std::to_string(node.size()) + ": " + e.what();
      }
      it = cache_.emplace(std::move(key), std::move(star)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  const DivProp& p_;
  const LargenessConfig& cfg_;
  std::map<Key, std::optional<StarSet>> cache_;
  std::string failure_;
};

Certificate make_certificate(const Coloring& c, const DivProp& p, std::size_t color,
                             std::size_t depth, std::vector<std::vector<std::int64_t>> nodes) {
  std::sort(nodes.begin(), nodes.end());
  Certificate cert{color, depth, p, DenseTree{std::move(nodes)}, coloring_digest(c)};
  return cert;
}

}  // namespace

std::string to_string(SearchMode mode) { return mode == SearchMode::Exact ? "exact" : "guided"; }

SearchMode search_mode_from_string(const std::string& name) {
  if (name == "exact") return SearchMode::Exact;
  if (name == "guided") return SearchMode::Guided;
  throw Error(ErrorKind::InvalidArgument, "unknown search mode '" + name + "'");
}

bool tree_exists(const Coloring& c, const DivProp& p, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
  ExactSearch search(p);
  for (std::size_t i = 0; i < c.r(); ++i)
    if (search.good(c.color_class(i), 0, 0, depth)) return true;
  return false;
}

Certificate build_tree(const Coloring& c, const DivProp& p, std::size_t depth, SearchMode mode,
                       const LargenessConfig& cfg) {
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");

  if (mode == SearchMode::Exact) {
    ExactSearch search(p);
    for (std::size_t i = 0; i < c.r(); ++i) {
      const IntSet cls = c.color_class(i);
      if (!search.good(cls, 0, 0, depth)) continue;
      std::vector<std::vector<std::int64_t>> nodes;
      std::vector<std::int64_t> root;
      search.collect(cls, root, 0, depth, nodes);
      return make_certificate(c, p, i, depth, std::move(nodes));
    }
    throw Error(ErrorKind::NoTree, "no color admits a depth-" + std::to_string(depth) + " tree for " +
                                       p.describe());
  }

  const Universe u = c.universe();
  std::vector<IntSet> classes;
  for (std::size_t i = 0; i < c.r(); ++i) classes.push_back(c.color_class(i));
  ColorSplit split{0, SetFamily(u)};
  try {
    split = color_split(classes, SetFamily::trivial(u), p, cfg);
  } catch (const Error& e) {
    throw Error(ErrorKind::GuidedFailed, std::string("color split: ") + e.what());
  }
  GuidedSearch search(p, cfg);
  std::vector<std::vector<std::int64_t>> nodes;
  std::vector<std::int64_t> root;
  const IntSet& cls = classes[split.index];
  if (!search.grow(cls, cls, split.family, root, 0, depth, nodes))
    throw Error(ErrorKind::GuidedFailed, search.failure());
  return make_certificate(c, p, split.index, depth, std::move(nodes));
}

// Deliberately shares no traversal with the search engines: works on the
// explicit node list and recomputes every finite sum by subset enumeration.
bool verify_tree(const Certificate& cert, const Coloring& c, const DivProp& p) {
  if (cert.coloring_digest != coloring_digest(c))
    throw Error(ErrorKind::DigestMismatch, "certificate was issued for a different coloring");
  if (!(cert.prop == p)) return false;
  if (cert.color >= c.r() || cert.depth == 0) return false;

  const std::set<std::vector<std::int64_t>> nodes(cert.tree.nodes.begin(), cert.tree.nodes.end());
  if (nodes.size() != cert.tree.nodes.size()) return false;
  if (!nodes.contains({})) return false;

  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> children;
  for (const auto& node : nodes) {
    if (node.size() > cert.depth || node.size() >= 63) return false;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (node[i] < 1 || node[i] >= static_cast<std::int64_t>(c.n())) return false;
      if (i > 0 && node[i] <= node[i - 1]) return false;
    }
    if (!node.empty()) {
      std::vector<std::int64_t> parent(node.begin(), node.end() - 1);
      if (!nodes.contains(parent)) return false;
      children[parent].push_back(node.back());
    }
    const std::uint64_t subsets = std::uint64_t{1} << node.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < node.size(); ++i)
        if (mask >> i & 1U) sum += node[i];
      if (sum >= static_cast<std::int64_t>(c.n())) return false;
      if (c.color_of(sum) != cert.color) return false;
    }
  }

  for (const auto& node : nodes) {
    if (node.size() >= cert.depth) continue;
    IntSet branching(c.universe());
    if (auto it = children.find(node); it != children.end())
      for (const auto k : it->second) branching.insert(static_cast<std::size_t>(k));
    if (!p.holds(branching)) return false;
  }
  return true;
}

Certificate truncate(const Certificate& cert, std::size_t depth) {
  Certificate out = cert;
  out.depth = std::min(depth, cert.depth);
  std::erase_if(out.tree.nodes, [&](const auto& node) { return node.size() > out.depth; });
  return out;
}

ThresholdResult threshold(std::size_t r, std::size_t d, const DivProp& p, std::size_t n_max,
                          std::size_t jobs) {
  if (r == 0 || d == 0) throw Error(ErrorKind::InvalidArgument, "threshold needs r >= 1 and d >= 1");
  jobs = std::max<std::size_t>(jobs, 1);
  ThresholdResult result;

  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Coloring> colorings;
    enumerate_colorings(n, r, true, [&](const Coloring& c) {
      colorings.push_back(c);
      return true;
    });

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{kNone};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= colorings.size() || i > first_bad.load()) return;
        if (!tree_exists(colorings[i], p, d)) {
          std::size_t cur = first_bad.load();
          while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    result.colorings_checked += first_bad.load() == kNone ? colorings.size() : first_bad.load() + 1;

    if (first_bad.load() == kNone) {
      result.n = n;
      return result;
    }
    result.hardest = colorings[first_bad.load()];
  }
  return result;
}

}  // namespace hindman
