#include "cyclo/json_io.hpp"

#include <fstream>

#include "cyclo/error.hpp"

namespace cyclo {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

std::uint64_t unsigned_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad(std::string("field \"") + name + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

unsigned small_field(const json& j, const char* name) {
  const std::uint64_t v = unsigned_field(j, name);
  if (v > 64) bad(std::string("field \"") + name + "\" is too large");
  return static_cast<unsigned>(v);
}

}  // namespace

GModule module_from_json(const json& j) {
  const std::uint64_t p = unsigned_field(j, "p");
  if (p >= (1ULL << 31)) bad("p out of range");
  const unsigned n = small_field(j, "n");
  const json& rows = field(j, "sigma");
  if (!rows.is_array()) bad("\"sigma\" must be an array of rows");
  std::vector<std::vector<std::int64_t>> entries;
  for (const auto& row : rows) {
    if (!row.is_array()) bad("\"sigma\" rows must be arrays");
    auto& out = entries.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) bad("\"sigma\" entries must be integers");
      out.push_back(v.get<std::int64_t>());
    }
  }
  for (const auto& row : entries)
    if (row.size() != entries.size()) throw Error(ErrorKind::DimensionMismatch, "\"sigma\" must be square");
  const auto residue = static_cast<Residue>(p);
  FpMatrix sigma = entries.empty() ? FpMatrix(residue, 0, 0) : FpMatrix(residue, entries);
  return GModule(residue, n, std::move(sigma));
}

json module_to_json(const GModule& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.sigma()(r, c));
    rows.push_back(std::move(row));
  }
  return {{"p", m.p()}, {"n", m.n()}, {"sigma", std::move(rows)}};
}

Theorem1Shape shape_from_json(const json& j) {
  Theorem1Shape s;
  const json& ranks = field(j, "free_ranks");
  if (!ranks.is_array()) bad("\"free_ranks\" must be an array");
  for (const auto& v : ranks) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad("\"free_ranks\" entries must be non-negative integers");
    s.free_ranks.push_back(v.get<std::size_t>());
  }
  if (auto it = j.find("exceptional"); it != j.end() && !it->is_null()) {
    ExceptionalSummand x;
    x.m = small_field(*it, "m");
    x.dim = it->contains("dim") ? unsigned_field(*it, "dim") : 0;
    s.exceptional = x;
  }
  return s;
}

json shape_to_json(const Theorem1Shape& s) {
  json out = {{"free_ranks", s.free_ranks}};
  out["exceptional"] = s.exceptional ? json{{"m", s.exceptional->m}, {"dim", s.exceptional->dim}} : json(nullptr);
  return out;
}

TowerSpec tower_from_json(const json& j) {
  const json& tag = field(j, "variant");
  if (!tag.is_string()) bad("\"variant\" must be a string");
  const std::string variant = tag.get<std::string>();
  if (variant == "brauer_rowen") {
    const json& t = field(j, "t");
    MValue tv = MValue::undetermined();
    if (t.is_string()) tv = MValue::parse(t.get<std::string>());
    else if (t.is_number_integer()) tv = MValue::finite(t.get<int>());
    else bad("\"t\" must be an integer or \"-inf\"");
    return tower::BrauerRowen{unsigned_field(j, "p"), small_field(j, "n"), tv};
  }
  if (variant == "function_field") {
    const json& base = field(j, "base");
    if (!base.is_object()) bad("\"base\" must be an object");
    if (base.contains("cyclotomic"))
      return tower::FunctionField{unsigned_field(j, "p"), small_field(j, "n"),
                                  RootOfUnityContent::cyclotomic(unsigned_field(base, "cyclotomic"))};
    if (base.contains("finite_field"))
      return tower::FunctionField{unsigned_field(j, "p"), small_field(j, "n"),
                                  RootOfUnityContent::finite_field(unsigned_field(base, "finite_field"))};
    bad("\"base\" needs \"cyclotomic\" or \"finite_field\"");
  }
  if (variant == "local_cyclotomic")
    return tower::LocalCyclotomic{unsigned_field(j, "p"), small_field(j, "n"), unsigned_field(j, "q")};
  if (variant == "local_kummer") return tower::LocalKummer{unsigned_field(j, "p"), small_field(j, "n"), unsigned_field(j, "l")};
  if (variant == "biquadratic") {
    const json& a = field(j, "a");
    mpz_class av;
    if (a.is_number_integer()) av = a.get<long>();
    else if (a.is_string() && av.set_str(a.get<std::string>(), 10) == 0) {
    } else bad("\"a\" must be an integer or a decimal string");
    const json& d = field(j, "d");
    if (!d.is_number_integer()) bad("\"d\" must be an integer");
    return tower::Biquadratic{av, d.get<int>()};
  }
  bad("unknown variant \"" + variant + "\"");
}

json tower_to_json(const TowerSpec& spec) {
  json out = {{"variant", tower_name(spec)}};
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, tower::Biquadratic>) {
          out["a"] = s.a.get_str();
          out["d"] = s.d;
        } else {
          out["p"] = s.p;
          out["n"] = s.n;
          if constexpr (std::is_same_v<T, tower::BrauerRowen>) out["t"] = mvalue_to_json(s.t);
          if constexpr (std::is_same_v<T, tower::FunctionField>) {
            const char* key = s.base.kind() == RootOfUnityContent::Kind::Cyclotomic ? "cyclotomic" : "finite_field";
            out["base"] = {{key, s.base.value()}};
          }
          if constexpr (std::is_same_v<T, tower::LocalCyclotomic>) out["q"] = s.q;
          if constexpr (std::is_same_v<T, tower::LocalKummer>) out["l"] = s.l;
        }
      },
      spec);
  return out;
}

json mvalue_to_json(const MValue& m) {
  if (m.is_finite()) return m.value();
  return m.to_string();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace cyclo
