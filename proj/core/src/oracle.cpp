#include "hindman/oracle.hpp"

#include <random>
#include <sstream>

#include "hindman/error.hpp"
#include "hindman/fip.hpp"
#include "hindman/tree.hpp"

namespace hindman {

namespace {

using Membership = std::vector<char>;

IntSet to_intset(Universe u, const Membership& m) {
  return IntSet::from_predicate(u, [&](std::size_t i) { return m[i] != 0; });
}

Membership to_membership(const IntSet& s) {
  Membership m(s.universe().size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = s.contains(static_cast<std::int64_t>(i)) ? 1 : 0;
  return m;
}

bool all_subfamilies(const std::vector<Membership>& sets, std::size_t from, const Membership& acc,
                     Universe u, const DivProp& p) {
  for (std::size_t j = from; j < sets.size(); ++j) {
    Membership next(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) next[i] = static_cast<char>(acc[i] && sets[j][i]);
    if (!p.holds(to_intset(u, next))) return false;
    if (!all_subfamilies(sets, j + 1, next, u, p)) return false;
  }
  return true;
}

class TreeOracle {
 public:
  TreeOracle(const Coloring& c, const DivProp& p, std::size_t color) : c_(c), p_(p), color_(color) {}

  bool sums_in_color(const std::vector<std::int64_t>& f) const {
    const std::int64_t n = static_cast<std::int64_t>(c_.n());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1U) sum += f[i];
      if (sum >= n || c_.colors()[static_cast<std::size_t>(sum) - 1] != color_) return false;
    }
    return true;
  }

  bool exists(std::vector<std::int64_t>& f, std::size_t height) {
    if (height == 0) return true;
    std::vector<std::int64_t> viable;
    const std::int64_t start = f.empty() ? 1 : f.back() + 1;
    for (std::int64_t m = start; m < static_cast<std::int64_t>(c_.n()); ++m) {
      f.push_back(m);
      if (sums_in_color(f) && exists(f, height - 1)) viable.push_back(m);
      f.pop_back();
    }
    // Every nonempty choice of child set drawn from the viable children.
    const Universe u = c_.universe();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << viable.size()); ++mask) {
      Membership kids(c_.n(), 0);
      for (std::size_t i = 0; i < viable.size(); ++i)
        if (mask >> i & 1U) kids[static_cast<std::size_t>(viable[i])] = 1;
      if (p_.holds(to_intset(u, kids))) return true;
    }
    return false;
  }

 private:
  const Coloring& c_;
  const DivProp& p_;
  std::size_t color_;
};

std::string describe_family(const SetFamily& u) {
  std::ostringstream os;
  os << "n=" << u.universe().size() << " members=";
  for (const auto& m : u) {
    os << '[';
    bool first = true;
    m.for_each([&](std::size_t x) {
      os << (first ? "" : ",") << x;
      first = false;
    });
    os << ']';
  }
  return os.str();
}

std::string describe_coloring(const Coloring& c) {
  std::ostringstream os;
  os << "n=" << c.n() << " r=" << c.r() << " colors=";
  for (const auto x : c.colors()) os << x;
  return os.str();
}

}  // namespace

bool pfip_oracle(const SetFamily& u, const DivProp& p) {
  if (u.size() > kPfipOracleMaxMembers)
    throw Error(ErrorKind::TooLarge, "pfip_oracle handles at most 20 members");
  if (u.empty()) throw Error(ErrorKind::EmptyFamily, "pfip_oracle of an empty family");
  std::vector<Membership> sets;
  for (const auto& m : u) sets.push_back(to_membership(m));
  const Membership everything(u.universe().size(), 1);
  return all_subfamilies(sets, 0, everything, u.universe(), p);
}

bool tree_oracle(const Coloring& c, const DivProp& p, std::size_t depth) {
  if (c.n() > kTreeOracleMaxN || depth > kTreeOracleMaxDepth)
    throw Error(ErrorKind::TooLarge, "tree_oracle handles n <= 12 and depth <= 3");
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
  for (std::size_t color = 0; color < c.r(); ++color) {
    TreeOracle oracle(c, p, color);
    std::vector<std::int64_t> root;
    if (oracle.exists(root, depth)) return true;
  }
  return false;
}

std::uint64_t coloring_count(std::size_t n, std::size_t r, bool prune) {
  const std::size_t free = n <= 1 ? 0 : (prune ? n - 2 : n - 1);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / r) return std::numeric_limits<std::uint64_t>::max();
    count *= r;
  }
  return count;
}

std::uint64_t enumerate_colorings(std::size_t n, std::size_t r, bool prune,
                                  const std::function<bool(const Coloring&)>& visit, std::uint64_t cap) {
  if (n == 0 || r == 0) throw Error(ErrorKind::InvalidArgument, "enumerate_colorings needs n, r >= 1");
  const std::uint64_t total = coloring_count(n, r, prune);
  if (total > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(r) + "-colorings of [1, " + std::to_string(n) +
                                            ") exceed the cap of " + std::to_string(cap));

  std::vector<std::size_t> colors(n - 1, 0);
  const std::size_t fixed = (prune && n >= 2) ? 1 : 0;
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(Coloring(n, r, colors))) return visited;
    // Odometer with the last position fastest, giving lexicographic order.
    std::size_t i = colors.size();
    while (i > fixed && colors[i - 1] == r - 1) colors[--i] = 0;
    if (i == fixed) return visited;
    ++colors[i - 1];
  }
}

OracleReport check_pfip_agreement(Universe u, const DivProp& p, std::size_t families,
                                  std::size_t max_members, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(max_members, 1));
  std::uniform_real_distribution<double> density(0.55, 1.0);
  OracleReport report;
  for (std::size_t f = 0; f < families; ++f) {
    const std::size_t k = size_dist(rng);
    std::vector<IntSet> members;
    for (std::size_t j = 0; j < k; ++j) {
      std::bernoulli_distribution coin(density(rng));
      members.push_back(IntSet::from_predicate(u, [&](std::size_t) { return coin(rng); }));
    }
    const SetFamily family(u, std::move(members));
    const bool fast = pfip(family, p);
    const bool slow = pfip_oracle(family, p);
    ++report.checked;
    if (fast != slow)
      report.mismatches.push_back({describe_family(family), fast ? "true" : "false", slow ? "true" : "false"});
  }
  return report;
}

OracleReport check_tree_agreement(std::size_t n, std::size_t r, std::size_t depth, const DivProp& p) {
  OracleReport report;
  enumerate_colorings(n, r, false, [&](const Coloring& c) {
    const bool fast = tree_exists(c, p, depth);
    const bool slow = tree_oracle(c, p, depth);
    ++report.checked;
    if (fast != slow)
      report.mismatches.push_back({describe_coloring(c), fast ? "tree" : "NoTree", slow ? "tree" : "NoTree"});
    return true;
  });
  return report;
}

}  // namespace hindman
