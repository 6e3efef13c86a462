#include "hindman/io.hpp"

#include <fstream>
#include <sstream>

#include "hindman/error.hpp"
#include "json.hpp"

namespace hindman {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

// Wraps nlohmann's type errors so callers only ever see Error.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string rational_text(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational::make(j.get<std::int64_t>(), 1);
  if (j.is_array() && j.size() == 2) return Rational::make(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto num = std::stoll(s, &used);
      if (used != s.size()) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
      return Rational::make(num, 1);
    }
    const auto num_text = s.substr(0, slash);
    const auto den_text = s.substr(slash + 1);
    std::size_t used_den = 0;
    const auto num = std::stoll(num_text, &used);
    const auto den = std::stoll(den_text, &used_den);
    if (used != num_text.size() || used_den != den_text.size())
      throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    return Rational::make(num, den);
  }
  throw Error(ErrorKind::Parse, "rational must be \"p/q\", an integer, or [p, q]");
}

std::size_t universe_size(const json& j) {
  const auto n = field(j, "n").get<std::int64_t>();
  if (n < 1) throw Error(ErrorKind::Parse, "universe size must be >= 1");
  return static_cast<std::size_t>(n);
}

IntSet intset_from(Universe u, const json& members) {
  if (!members.is_array()) throw Error(ErrorKind::Parse, "set members must be an array");
  return IntSet::from_members(u, members.get<std::vector<std::int64_t>>());
}

json prop_json(const DivProp& p) {
  json j;
  j["variant"] = to_string(p.variant());
  std::visit(overloaded{
                 [&](const prop::Infinite& x) { j["k"] = x.k; },
                 [&](const prop::Banach& x) {
                   j["delta"] = rational_text(x.delta);
                   j["w"] = x.w;
                 },
                 [&](const prop::Syndetic& x) {
                   j["g"] = x.g;
                   j["w"] = x.w;
                 },
                 [&](const prop::Recip& x) { j["s"] = rational_text(x.s); },
                 [&](const prop::HitSet& x) {
                   j["n"] = x.w.universe().size();
                   j["W"] = x.w.members();
                 },
             },
             p.params());
  if (p.margin()) j["margin"] = *p.margin();
  return j;
}

DivProp prop_from(const json& j) {
  const auto variant = field(j, "variant").get<std::string>();
  std::optional<std::size_t> margin;
  if (j.contains("margin")) {
    const auto m = j.at("margin").get<std::int64_t>();
    if (m < 0) throw Error(ErrorKind::Parse, "margin must be >= 0");
    margin = static_cast<std::size_t>(m);
  }
  auto integer = [&](const char* key) { return field(j, key).get<std::int64_t>(); };
  if (variant == "INFINITE") return DivProp(prop::Infinite{integer("k")}, margin);
  if (variant == "BANACH") return DivProp(prop::Banach{rational_from(field(j, "delta")), integer("w")}, margin);
  if (variant == "SYNDETIC") return DivProp(prop::Syndetic{integer("g"), integer("w")}, margin);
  if (variant == "RECIP") return DivProp(prop::Recip{rational_from(field(j, "s"))}, margin);
  if (variant == "HITSET") {
    const Universe u(universe_size(j));
    return DivProp(prop::HitSet{intset_from(u, field(j, "W"))}, margin);
  }
  throw Error(ErrorKind::Parse, "unknown property variant '" + variant + "'");
}

json family_json(const SetFamily& f) {
  json members = json::array();
  for (const auto& m : f) members.push_back(m.members());
  return json{{"n", f.universe().size()}, {"members", members}};
}

json coloring_json(const Coloring& c) {
  return json{{"n", c.n()}, {"r", c.r()},
              {"colors", std::vector<std::size_t>(c.colors().begin(), c.colors().end())}};
}

}  // namespace

std::string to_json(const IntSet& s) {
  return json{{"n", s.universe().size()}, {"members", s.members()}}.dump();
}

std::string to_json(const DivProp& p) { return prop_json(p).dump(); }

std::string to_json(const SetFamily& f) { return family_json(f).dump(); }

std::string to_json(const Coloring& c) { return coloring_json(c).dump(); }

std::string to_json(const Certificate& cert) {
  json j;
  j["color"] = cert.color;
  j["depth"] = cert.depth;
  j["prop"] = prop_json(cert.prop);
  j["nodes"] = cert.tree.nodes;
  j["coloring_digest"] = cert.coloring_digest;
  return j.dump();
}

std::string to_json(const AxiomReport& report) {
  json axioms = json::array();
  for (const auto& a : report.axioms) {
    axioms.push_back(json{{"axiom", a.index},
                          {"name", a.name},
                          {"level", to_string(a.level)},
                          {"checked", a.checked},
                          {"failures", a.failures},
                          {"pass_rate", a.pass_rate()},
                          {"required_rate", a.required_rate},
                          {"passed", a.passed()}});
  }
  return json{{"property", report.property},
              {"n", report.universe},
              {"margin", report.margin},
              {"samples", report.samples},
              {"seed", report.seed},
              {"axioms", axioms},
              {"all_passed", report.all_passed()}}
      .dump();
}

IntSet intset_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    return intset_from(Universe(universe_size(j)), field(j, "members"));
  });
}

DivProp prop_from_json(std::string_view text) {
  return guarded([&] { return prop_from(parse(text)); });
}

SetFamily family_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    const Universe u(universe_size(j));
    const json& members = field(j, "members");
    if (!members.is_array()) throw Error(ErrorKind::Parse, "family members must be an array");
    std::vector<IntSet> sets;
    for (const auto& m : members) sets.push_back(intset_from(u, m));
    return SetFamily(u, std::move(sets));
  });
}

Coloring coloring_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    const auto r = field(j, "r").get<std::int64_t>();
    if (r < 1) throw Error(ErrorKind::Parse, "r must be >= 1");
    const auto colors = field(j, "colors").get<std::vector<std::int64_t>>();
    std::vector<std::size_t> cs;
    for (const auto c : colors) {
      if (c < 0) throw Error(ErrorKind::Parse, "colors must be nonnegative");
      cs.push_back(static_cast<std::size_t>(c));
    }
    return Coloring(universe_size(j), static_cast<std::size_t>(r), std::move(cs));
  });
}

Certificate certificate_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    const auto color = field(j, "color").get<std::int64_t>();
    const auto depth = field(j, "depth").get<std::int64_t>();
    if (color < 0 || depth < 0) throw Error(ErrorKind::Parse, "color and depth must be nonnegative");
    return Certificate{static_cast<std::size_t>(color), static_cast<std::size_t>(depth),
                       prop_from(field(j, "prop")),
                       DenseTree{field(j, "nodes").get<std::vector<std::vector<std::int64_t>>>()},
                       field(j, "coloring_digest").get<std::string>()};
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace hindman
