// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_IO_HPP
#define FFC_IO_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffc/convolution.hpp"
#include "ffc/errors.hpp"
#include "ffc/graph.hpp"
#include "ffc/matrix.hpp"
#include "ffc/permutation.hpp"
#include "ffc/poly.hpp"
#include "ffc/quad_scalar.hpp"
#include "ffc/rational.hpp"
#include "ffc/transforms.hpp"

namespace ffc {

using Json = nlohmann::ordered_json;

/// Schema version written to and required of graph and certificate files.
inline constexpr int kFormatVersion = 1;

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

inline long long as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long long>();
}

inline int as_small_int(const Json& j, const std::string& where) {
  long long v = as_int(j, where);
  if (v < -(1LL << 30) || v > (1LL << 30)) throw ParseError(where, "integer out of range");
  return static_cast<int>(v);
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

inline const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

inline std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

}  // namespace detail

/// Rationals are canonical strings; plain JSON integers are also accepted on input.
inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  return parse_rational(detail::as_string(j, where), where);
}

/// Exact string plus a 15-digit decimal.
inline Json exact_to_json(const Rational& q) { return Json{{"exact", to_string(q)}, {"decimal", to_decimal(q)}}; }
inline Json exact_to_json(const QuadScalar& q) { return Json{{"exact", q.str()}, {"decimal", q.decimal()}}; }

inline Json poly_to_json(const RatPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
  return Json{{"coeffs", coeffs}};
}

inline RatPoly poly_from_json(const Json& j, const std::string& where = "poly") {
  const Json& cs = detail::as_array(detail::field(j, "coeffs", where), where + ".coeffs");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) coeffs.push_back(rational_from_json(cs[i], detail::at(where + ".coeffs", i)));
  return RatPoly(std::move(coeffs));
}

inline Json matrix_to_json(const RatMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(rational_to_json(e));
  Json j{{"n", m.size()}, {"entries", entries}};
  if (m.row_sum()) j["row_sum"] = rational_to_json(*m.row_sum());
  return j;
}

/// A stated row_sum is verified, not trusted.
inline RatMatrix matrix_from_json(const Json& j, const std::string& where = "matrix") {
  long long n = detail::as_int(detail::field(j, "n", where), where + ".n");
  if (n < 0 || n > 4096) throw ParseError(where + ".n", "matrix size out of range");
  const Json& es = detail::as_array(detail::field(j, "entries", where), where + ".entries");
  const auto size = static_cast<std::size_t>(n);
  if (es.size() != size * size) throw ParseError(where + ".entries", "expected n*n entries");
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < es.size(); ++i) entries.push_back(rational_from_json(es[i], detail::at(where + ".entries", i)));
  RatMatrix m(size, std::move(entries));
  if (j.contains("row_sum")) {
    Rational s = rational_from_json(j["row_sum"], where + ".row_sum");
    auto actual = m.constant_row_sum();
    if (!actual || *actual != s) throw ParseError(where + ".row_sum", "rows do not sum to the stated value");
    m.mark_row_sum();
  }
  return m;
}

inline GraphMode parse_graph_mode(const std::string& s, const std::string& where = "mode") {
  if (s == "bipartite") return GraphMode::bipartite;
  if (s == "nonbipartite" || s == "plain") return GraphMode::nonbipartite;
  throw ParseError(where, "unknown graph mode '" + s + "'");
}

inline Verdict parse_verdict(const std::string& s, const std::string& where = "verdict") {
  for (auto v : {Verdict::strictly_ramanujan, Verdict::ramanujan_with_boundary, Verdict::not_ramanujan})
    if (s == to_string(v)) return v;
  throw ParseError(where, "unknown verdict '" + s + "'");
}

inline ConvolutionKind parse_convolution_kind(const std::string& s, const std::string& where = "kind") {
  if (s == "sym" || s == "symmetric") return ConvolutionKind::symmetric;
  if (s == "asym" || s == "asymmetric") return ConvolutionKind::asymmetric;
  throw ParseError(where, "unknown convolution kind '" + s + "'");
}

inline const char* short_name(ConvolutionKind k) { return k == ConvolutionKind::symmetric ? "sym" : "asym"; }

inline Json graph_to_json(const MatchingUnion& g) {
  Json perms = Json::array();
  for (const auto& p : g.perms) perms.push_back(p.image);
  Json j{{"version", kFormatVersion}, {"mode", to_string(g.mode)}, {"d", g.d}, {"m", g.m}, {"perms", perms}};
  if (g.seed) j["seed"] = *g.seed;
  return j;
}

inline void check_version(const Json& j, const std::string& where) {
  long long v = detail::as_int(detail::field(j, "version", where), where + ".version");
  if (v != kFormatVersion)
    throw ParseError(where + ".version",
                     "unsupported version " + std::to_string(v) + " (expected " + std::to_string(kFormatVersion) + ")");
}

inline MatchingUnion graph_from_json(const Json& j, const std::string& where = "graph") {
  check_version(j, where);
  MatchingUnion g;
  g.mode = parse_graph_mode(detail::as_string(detail::field(j, "mode", where), where + ".mode"), where + ".mode");
  g.d = detail::as_small_int(detail::field(j, "d", where), where + ".d");
  g.m = detail::as_small_int(detail::field(j, "m", where), where + ".m");
  if (g.d < 1) throw ParseError(where + ".d", "d must be >= 1");
  if (g.m < 1) throw ParseError(where + ".m", "m must be >= 1");
  if (g.mode == GraphMode::nonbipartite && g.d % 2) throw ParseError(where + ".d", "nonbipartite graphs need an even d");
  const Json& ps = detail::as_array(detail::field(j, "perms", where), where + ".perms");
  if (ps.size() != static_cast<std::size_t>(g.m)) throw ParseError(where + ".perms", "expected m permutations");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string pw = detail::at(where + ".perms", i);
    const Json& row = detail::as_array(ps[i], pw);
    if (row.size() != static_cast<std::size_t>(g.d)) throw ParseError(pw, "expected d entries");
    std::vector<int> image;
    for (std::size_t k = 0; k < row.size(); ++k) image.push_back(detail::as_small_int(row[k], detail::at(pw, k)));
    try {
      g.perms.push_back(Permutation::from_image(std::move(image)));
    } catch (const ParameterError& e) {
      throw ParseError(pw, std::string("not a permutation: ") + e.what());
    }
  }
  if (j.contains("seed")) {
    const Json& s = j["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw ParseError(where + ".seed", "expected an unsigned integer");
    g.seed = s.get<std::uint64_t>();
  }
  return g;
}

inline Json certificate_to_json(const RamanujanCertificate& c) {
  return Json{{"version", kFormatVersion},
              {"graph", graph_to_json(c.graph)},
              {"char_poly", poly_to_json(c.char_poly)},
              {"deflated", poly_to_json(c.deflated)},
              {"bound", exact_to_json(c.bound)},
              {"interior_count", c.interior_count},
              {"boundary_count", c.boundary_count},
              {"exterior_count", c.exterior_count},
              {"verdict", to_string(c.verdict)},
              {"lambda2_lo", exact_to_json(c.lambda2_lo)},
              {"lambda2_hi", exact_to_json(c.lambda2_hi)}};
}

/// Reads the exact fields; decimals are ignored. Use reverify() to check the
/// claims against the graph.
inline RamanujanCertificate certificate_from_json(const Json& j, const std::string& where = "certificate") {
  using detail::field;
  check_version(j, where);
  RamanujanCertificate c;
  c.graph = graph_from_json(field(j, "graph", where), where + ".graph");
  c.char_poly = poly_from_json(field(j, "char_poly", where), where + ".char_poly");
  c.deflated = poly_from_json(field(j, "deflated", where), where + ".deflated");
  auto exact = [&](const char* key) {
    const std::string w = where + "." + key;
    return detail::as_string(field(field(j, key, where), "exact", w), w + ".exact");
  };
  c.bound = parse_quad_scalar(exact("bound"), where + ".bound");
  c.interior_count = detail::as_small_int(field(j, "interior_count", where), where + ".interior_count");
  c.boundary_count = detail::as_small_int(field(j, "boundary_count", where), where + ".boundary_count");
  c.exterior_count = detail::as_small_int(field(j, "exterior_count", where), where + ".exterior_count");
  c.verdict = parse_verdict(detail::as_string(field(j, "verdict", where), where + ".verdict"), where + ".verdict");
  c.lambda2_lo = parse_rational(exact("lambda2_lo"), where + ".lambda2_lo");
  c.lambda2_hi = parse_rational(exact("lambda2_hi"), where + ".lambda2_hi");
  return c;
}

/// Swap programs as (s, t, alpha) triples.
inline Json program_to_json(const SwapProgram& p) {
  Json swaps = Json::array();
  for (const auto& sw : p.swaps) swaps.push_back(Json::array({sw.s, sw.t, to_string(sw.alpha)}));
  return Json{{"d", p.d}, {"swaps", swaps}};
}

inline SwapProgram program_from_json(const Json& j, const std::string& where = "program") {
  SwapProgram p;
  p.d = detail::as_small_int(detail::field(j, "d", where), where + ".d");
  const Json& ss = detail::as_array(detail::field(j, "swaps", where), where + ".swaps");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string w = detail::at(where + ".swaps", i);
    const Json& t = detail::as_array(ss[i], w);
    if (t.size() != 3) throw ParseError(w, "expected an (s, t, alpha) triple");
    p.swaps.push_back({detail::as_small_int(t[0], w + "[0]"), detail::as_small_int(t[1], w + "[1]"),
                       rational_from_json(t[2], w + "[2]")});
  }
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ParseError(where, e.what());
  }
  return p;
}

inline Json table_row_to_json(const TableRow& r) {
  return Json{{"m", r.m},
              {"d", r.d},
              {"mode", short_name(r.mode)},
              {"poly", poly_to_json(r.poly)},
              {"root_lo", exact_to_json(r.root_lo)},
              {"root_hi", exact_to_json(r.root_hi)},
              {"bound", exact_to_json(r.bound)},
              {"below_bound", r.below_bound}};
}

inline Json table_to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(table_row_to_json(r));
  return Json{{"version", kFormatVersion}, {"rows", out}};
}

/// One header line, then one line per row; exact columns precede decimals.
inline std::string table_to_tsv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "m\td\tmode\troot_lo\troot_hi\troot_decimal\tbound\tbound_decimal\tbelow_bound\n";
  for (const auto& r : rows)
    os << r.m << '\t' << r.d << '\t' << short_name(r.mode) << '\t' << to_string(r.root_lo) << '\t'
       << to_string(r.root_hi) << '\t' << to_decimal(r.root_hi) << '\t' << r.bound.str() << '\t' << r.bound.decimal()
       << '\t' << (r.below_bound ? "yes" : "no") << '\n';
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParameterError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ParameterError("write to '" + path + "' failed");
}

/// 64-bit FNV-1a. Identifies outputs in run manifests; not a security hash.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
  return s;
}

/// Everything needed to reproduce a run and to recognise its output.
/// Timing is the only field expected to differ between identical runs.
struct RunManifest {
  std::vector<std::string> command_line;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> budgets;
  std::vector<std::pair<std::string, std::string>> versions;
  double wall_seconds = 0;
  unsigned threads = 0;
  std::vector<std::pair<std::string, std::string>> output_digests;  // name, fnv1a64 hex
  int exit_status = 0;
};

inline Json manifest_to_json(const RunManifest& r) {
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
    Json o = Json::object();
    for (const auto& [k, val] : v) o[k] = val;
    return o;
  };
  Json j{{"version", kFormatVersion}, {"command_line", r.command_line}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["budgets"] = pairs(r.budgets);
  j["versions"] = pairs(r.versions);
  j["threads"] = r.threads;
  j["wall_seconds"] = r.wall_seconds;
  j["output_digests"] = pairs(r.output_digests);
  j["exit_status"] = r.exit_status;
  return j;
}

}  // namespace ffc

#endif  // FFC_IO_HPP
