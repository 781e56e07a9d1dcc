// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

// Command dispatch for the ffc tool. Kept in a header so tests can drive it
// in-process with string streams.

#ifndef FFC_TOOLS_CLI_HPP
#define FFC_TOOLS_CLI_HPP

#include <gmp.h>

#include <boost/version.hpp>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffc/ffc.hpp"

namespace ffc::cli {

/// Process exit statuses. Stable across releases.
enum ExitStatus : int {
  kOk = 0,
  kVerdictFailure = 1,
  kUsageError = 2,
  kResourceError = 3,
  kInternalError = 4,
};

struct Options {
  std::string out;
  std::string manifest;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string mode = "bipartite";
  std::string kind = "sym";
  std::string check;
  std::string strategy = "exact";
  std::string m_list;
  std::string d_list;
  std::vector<std::string> inputs;
  int d = 0;
  int m = 2;
  std::uint64_t trials = 10;
  std::uint64_t max_trials = 10000;
  std::uint64_t samples = 2000;
  std::size_t swaps = 8;
  bool bipartite = false;
  bool strict = false;
  bool allow_boundary = false;
};

/// Parses "a..b", "a,b,c" or "a". Ranges over d in symmetric mode keep only
/// even values, since odd d has no perfect matching.
inline std::vector<int> parse_int_list(const std::string& text, const std::string& what, bool even_only = false) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError(what, "malformed integer '" + s + "'");
    return v;
  };
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw ParseError(what, "empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v)
      if (!even_only || v % 2 == 0) out.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  }
  if (out.empty()) throw ParseError(what, "no values in '" + text + "'");
  return out;
}

inline Json bracket_to_json(const Rational& lo, const Rational& hi) {
  return Json{{"lo", exact_to_json(lo)}, {"hi", exact_to_json(hi)}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline bool is_ramanujan(Verdict v, bool strict) {
  return v == Verdict::strictly_ramanujan || (!strict && v == Verdict::ramanujan_with_boundary);
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
      : args_(args), out_(out), err_(err) {}

  int run() {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Finite free convolutions, interlacing families and Ramanujan multigraphs", "ffc"};
    std::string command;
    try {
      configure(app);
      std::vector<std::string> reversed(args_.rbegin(), args_.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsageError;
    }
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    int status = kInternalError;
    try {
      status = dispatch(command);
    } catch (const ResourceError& e) {
      err_ << "ffc " << command << ": resource budget exceeded: " << e.what() << "\n";
      status = kResourceError;
    } catch (const ParseError& e) {
      err_ << "ffc " << command << ": malformed input at " << e.what() << "\n";
      status = kUsageError;
    } catch (const ParameterError& e) {
      err_ << "ffc " << command << ": " << e.what() << "\n";
      status = kUsageError;
    } catch (const ContractError& e) {
      err_ << "ffc " << command << ": precondition failed: " << e.what() << "\n";
      status = kUsageError;
    } catch (const PoleError& e) {
      err_ << "ffc " << command << ": " << e.what() << "\n";
      status = kUsageError;
    } catch (const std::exception& e) {
      err_ << "ffc " << command << ": internal error: " << e.what() << "\n";
      status = kInternalError;
    }
    if (!opt_.manifest.empty()) {
      manifest_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      manifest_.exit_status = status;
      try {
        write_text_file(opt_.manifest, dump(manifest_to_json(manifest_)));
      } catch (const std::exception& e) {
        err_ << "ffc: cannot write manifest: " << e.what() << "\n";
        if (status == kOk) status = kUsageError;
      }
    }
    return status;
  }

 private:
  void configure(CLI::App& app) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", opt_.out, "Write the primary output to this file");
    app.add_option("--manifest", opt_.manifest, "Write a run manifest (seed, budgets, versions, digests)");
    app.add_option("--format", opt_.format, "Output format for tabular commands")
        ->check(CLI::IsMember({"json", "tsv"}));

    const auto modes = CLI::IsMember({"bipartite", "plain", "nonbipartite"});

    auto* convolve = app.add_subcommand("convolve", "p [+] q, or the m-fold convolution of p");
    convolve->add_option("--kind", opt_.kind)->check(CLI::IsMember({"sym", "asym"}));
    convolve->add_option("--d", opt_.d, "Convolution dimension")->required();
    convolve->add_option("--m", opt_.m, "Number of copies of p when q is absent");
    convolve->add_option("inputs", opt_.inputs, "p.json [q.json]")->required()->expected(1, 2);

    auto* expected = app.add_subcommand("expected", "Exact expected characteristic polynomial of the graph model");
    expected->add_option("--mode", opt_.mode)->check(modes);
    expected->add_option("--d", opt_.d)->required();
    expected->add_option("--m", opt_.m)->required();

    auto* verify = app.add_subcommand("verify", "Randomized identity checks");
    verify->add_option("check", opt_.check)->required()->check(CLI::IsMember({"quadrature", "fourier", "swapreal"}));
    verify->add_flag("--bipartite", opt_.bipartite, "Bipartite quadrature");
    verify->add_option("--d", opt_.d)->required();
    verify->add_option("--trials", opt_.trials);
    verify->add_option("--seed", opt_.seed);
    verify->add_option("--swaps", opt_.swaps, "Random swaps per swapreal trial (split over two matrices)");

    auto* bound = app.add_subcommand("bound", "The bound 2 sqrt(m-1), exact and decimal");
    bound->add_option("--m", opt_.m)->required();

    auto* table = app.add_subcommand("table", "Largest root of m-fold matching convolutions against the bound");
    table->add_option("--m", opt_.m_list, "e.g. 3..8")->required();
    table->add_option("--d", opt_.d_list, "e.g. 4..24")->required();
    table->add_option("--mode", opt_.kind)->check(CLI::IsMember({"sym", "asym"}));

    auto* sample = app.add_subcommand("sample", "Sample a union of m random perfect matchings");
    sample->add_option("--mode", opt_.mode)->check(modes);
    sample->add_option("--d", opt_.d)->required();
    sample->add_option("--m", opt_.m)->required();
    sample->add_option("--seed", opt_.seed);

    auto* certify = app.add_subcommand("certify", "Exact Ramanujan certificate for a graph, or recheck a certificate");
    certify->add_option("input", opt_.inputs, "graph.json or certificate.json")->required()->expected(1);
    certify->add_flag("--strict", opt_.strict, "Require strictly-ramanujan");

    auto* search = app.add_subcommand("search", "Rejection search for a strictly Ramanujan graph");
    search->add_option("--mode", opt_.mode)->check(modes);
    search->add_option("--d", opt_.d)->required();
    search->add_option("--m", opt_.m)->required();
    search->add_option("--max-trials", opt_.max_trials);
    search->add_option("--seed", opt_.seed);
    search->add_flag("--allow-boundary", opt_.allow_boundary, "Also accept ramanujan-with-boundary");

    auto* descend = app.add_subcommand("descend", "Interlacing-family descent to a Ramanujan graph");
    descend->add_option("--mode", opt_.mode)->check(modes);
    descend->add_option("--d", opt_.d)->required();
    descend->add_option("--m", opt_.m)->required();
    descend->add_option("--strategy", opt_.strategy)->check(CLI::IsMember({"exact", "sampled"}));
    descend->add_option("--seed", opt_.seed);
    descend->add_option("--samples", opt_.samples, "Monte Carlo trials per expectation (sampled strategy)");
  }

  int dispatch(const std::string& command) {
    manifest_.command_line = {"ffc"};
    manifest_.command_line.insert(manifest_.command_line.end(), args_.begin(), args_.end());
    manifest_.threads = thread_count();
    manifest_.versions = {{"ffc", kVersion},
                          {"gmp", gmp_version},
                          {"boost", BOOST_LIB_VERSION},
                          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                          {"cli11", CLI11_VERSION},
                          {"compiler", __VERSION__}};
    manifest_.budgets = {{"leaf_budget", std::to_string(kLeafBudget)},
                         {"determinant_budget", std::to_string(kDeterminantBudget)}};
    if (opt_.format == "tsv" && command != "table" && command != "verify" && command != "bound")
      throw ParameterError("--format tsv is only available for table, verify and bound");
    if (command == "convolve") return convolve();
    if (command == "expected") return expected();
    if (command == "verify") return verify();
    if (command == "bound") return bound();
    if (command == "table") return table();
    if (command == "sample") return sample();
    if (command == "certify") return certify();
    if (command == "search") return search();
    if (command == "descend") return descend();
    throw InternalError("unhandled subcommand '" + command + "'");
  }

  /// Primary output: to --out when given, else stdout. Digested either way.
  void emit(const std::string& text) {
    if (opt_.out.empty()) {
      out_ << text;
      manifest_.output_digests.emplace_back("stdout", hex64(fnv1a64(text)));
    } else {
      write_text_file(opt_.out, text);
      manifest_.output_digests.emplace_back(opt_.out, hex64(fnv1a64(text)));
    }
  }

  void use_seed() { manifest_.seed = opt_.seed; }
  void budget(const std::string& k, std::uint64_t v) { manifest_.budgets.emplace_back(k, std::to_string(v)); }

  int convolve() {
    auto kind = parse_convolution_kind(opt_.kind, "--kind");
    RatPoly p = poly_from_json(read_json_file(opt_.inputs[0]), opt_.inputs[0]);
    RatPoly r;
    Json j{{"command", "convolve"}, {"kind", short_name(kind)}, {"d", opt_.d}};
    if (opt_.inputs.size() == 2) {
      RatPoly q = poly_from_json(read_json_file(opt_.inputs[1]), opt_.inputs[1]);
      r = ffc::convolve(kind, p, q, opt_.d);
    } else {
      r = m_fold(kind, p, opt_.m, opt_.d);
      j["m"] = opt_.m;
    }
    j["poly"] = poly_to_json(r);
    j["text"] = to_string(r);
    j["real_rooted"] = !r.is_zero() && is_real_rooted(r);
    emit(dump(j));
    return kOk;
  }

  int expected() {
    auto mode = parse_graph_mode(opt_.mode, "--mode");
    RatPoly e = expected_poly_for_graph_model(mode, opt_.d, opt_.m);
    Json j{{"command", "expected"}, {"mode", to_string(mode)}, {"d", opt_.d}, {"m", opt_.m}};
    j["poly"] = poly_to_json(e);
    j["text"] = to_string(e);
    emit(dump(j));
    return kOk;
  }

  int verify() {
    use_seed();
    budget("trials", opt_.trials);
    Json records = Json::array();
    std::ostringstream tsv;
    int failures = 0;
    if (opt_.check == "quadrature") {
      tsv << "trial\tequal\tterms\tlhs\trhs\n";
      for (std::uint64_t t = 0; t < opt_.trials; ++t) {
        Rng rng = Rng::derive(opt_.seed, t);
        const auto n = static_cast<std::size_t>(opt_.d);
        RatMatrix a = opt_.bipartite ? random_doubly_regular(n, rng) : random_symmetric_regular(n, rng);
        RatMatrix b = opt_.bipartite ? random_doubly_regular(n, rng) : random_symmetric_regular(n, rng);
        QuadratureReport r = opt_.bipartite ? verify_bip_quadrature(a, b) : verify_sym_quadrature(a, b);
        failures += !r.equal;
        records.push_back(Json{{"trial", t},
                               {"a", matrix_to_json(a)},
                               {"b", matrix_to_json(b)},
                               {"lhs", poly_to_json(r.lhs)},
                               {"rhs", poly_to_json(r.rhs)},
                               {"equal", r.equal},
                               {"terms", r.terms}});
        tsv << t << '\t' << (r.equal ? "yes" : "no") << '\t' << r.terms << '\t' << to_string(r.lhs) << '\t'
            << to_string(r.rhs) << '\n';
      }
    } else if (opt_.check == "fourier") {
      tsv << "trial\trelative\tmax_high\tc2\tpass\n";
      for (std::uint64_t t = 0; t < opt_.trials; ++t) {
        Rng rng = Rng::derive(opt_.seed, t);
        const auto n = static_cast<std::size_t>(opt_.d);
        RatMatrix a = random_integer_matrix(n, rng), b = random_integer_matrix(n, rng);
        FourierReport r = fourier_degree_test(a, b, 16);
        const bool pass = r.relative < 1e-8;
        failures += !pass;
        records.push_back(Json{{"trial", t},
                               {"a", matrix_to_json(a)},
                               {"b", matrix_to_json(b)},
                               {"relative", r.relative},
                               {"max_high", r.max_high},
                               {"c2", r.c2},
                               {"pass", pass}});
        tsv << t << '\t' << r.relative << '\t' << r.max_high << '\t' << r.c2 << '\t' << (pass ? "yes" : "no") << '\n';
      }
    } else {
      budget("swaps", opt_.swaps);
      tsv << "trial\treal_rooted\texpected\n";
      for (std::uint64_t t = 0; t < opt_.trials; ++t) {
        Rng rng = Rng::derive(opt_.seed, t);
        const auto n = static_cast<std::size_t>(opt_.d);
        std::vector<RatMatrix> ms{random_symmetric_integer(n, rng), random_symmetric_integer(n, rng)};
        std::vector<SwapProgram> progs{random_swap_program(opt_.d, opt_.swaps / 2, rng),
                                       random_swap_program(opt_.d, opt_.swaps - opt_.swaps / 2, rng)};
        RatPoly e = expected_charpoly_swaps(ms, progs).poly;
        const bool real = is_real_rooted(e);
        failures += !real;
        records.push_back(Json{{"trial", t},
                               {"a", matrix_to_json(ms[0])},
                               {"b", matrix_to_json(ms[1])},
                               {"programs", Json::array({program_to_json(progs[0]), program_to_json(progs[1])})},
                               {"expected", poly_to_json(e)},
                               {"real_rooted", real}});
        tsv << t << '\t' << (real ? "yes" : "no") << '\t' << to_string(e) << '\n';
      }
    }
    if (opt_.format == "tsv") {
      emit(tsv.str());
    } else {
      emit(dump(Json{{"command", "verify"},
                     {"check", opt_.check},
                     {"bipartite", opt_.bipartite},
                     {"d", opt_.d},
                     {"trials", opt_.trials},
                     {"seed", opt_.seed},
                     {"failures", failures},
                     {"records", records}}));
    }
    if (failures) err_ << "ffc verify " << opt_.check << ": " << failures << " of " << opt_.trials << " trials failed\n";
    return failures ? kVerdictFailure : kOk;
  }

  int bound() {
    RamanujanBound b = ramanujan_bound(opt_.m);
    if (opt_.format == "tsv") {
      emit("m\texact\tdecimal\n" + std::to_string(opt_.m) + "\t" + b.exact.str() + "\t" + b.exact.decimal() + "\n");
    } else {
      emit(dump(Json{{"m", opt_.m}, {"exact", b.exact.str()}, {"decimal", b.exact.decimal()}}));
    }
    return kOk;
  }

  int table() {
    auto kind = parse_convolution_kind(opt_.kind, "--mode");
    auto ms = parse_int_list(opt_.m_list, "--m");
    auto ds = parse_int_list(opt_.d_list, "--d", kind == ConvolutionKind::symmetric);
    auto rows = mfold_root_bound_table(ms, ds, kind);
    emit(opt_.format == "tsv" ? table_to_tsv(rows) : dump(table_to_json(rows)));
    int above = 0;
    for (const auto& r : rows) above += !r.below_bound;
    if (above) err_ << "ffc table: " << above << " rows not below the bound\n";
    return above ? kVerdictFailure : kOk;
  }

  int sample() {
    use_seed();
    MatchingUnion g = trial_graph(parse_graph_mode(opt_.mode, "--mode"), opt_.d, opt_.m, opt_.seed, 0);
    emit(dump(graph_to_json(g)));
    return kOk;
  }

  int certify() {
    const std::string& path = opt_.inputs[0];
    Json doc = read_json_file(path);
    if (doc.is_object() && doc.contains("verdict")) {
      RamanujanCertificate claimed = certificate_from_json(doc, path);
      const bool holds = reverify(claimed);
      const bool ok = holds && is_ramanujan(claimed.verdict, opt_.strict);
      emit(dump(Json{{"command", "certify"},
                     {"input", "certificate"},
                     {"reverified", holds},
                     {"verdict", to_string(claimed.verdict)}}));
      err_ << "ffc certify: certificate " << (holds ? "re-verified" : "does NOT re-verify") << ", verdict "
           << to_string(claimed.verdict) << "\n";
      return ok ? kOk : kVerdictFailure;
    }
    RamanujanCertificate c = ffc::certify(graph_from_json(doc, path));
    emit(dump(certificate_to_json(c)));
    err_ << "ffc certify: " << to_string(c.verdict) << "\n";
    return is_ramanujan(c.verdict, opt_.strict) ? kOk : kVerdictFailure;
  }

  /// The summary goes to stdout; --out receives the certificate itself.
  int search() {
    use_seed();
    budget("max_trials", opt_.max_trials);
    auto mode = parse_graph_mode(opt_.mode, "--mode");
    SearchReport r = rejection_search(mode, opt_.d, opt_.m, opt_.max_trials, opt_.seed, opt_.allow_boundary);
    Json j{{"command", "search"},
           {"mode", to_string(mode)},
           {"d", opt_.d},
           {"m", opt_.m},
           {"seed", opt_.seed},
           {"max_trials", opt_.max_trials},
           {"trials_run", r.trials_run},
           {"successes", r.successes}};
    j["first_success_trial"] = r.first_success_trial ? Json(*r.first_success_trial) : Json(nullptr);
    j["verdict"] = r.certificate ? to_string(r.certificate->verdict) : "none";
    const std::string text = dump(j);
    out_ << text;
    manifest_.output_digests.emplace_back("stdout", hex64(fnv1a64(text)));
    if (r.certificate) {
      const std::string cert = dump(certificate_to_json(*r.certificate));
      if (!opt_.out.empty()) {
        write_text_file(opt_.out, cert);
        manifest_.output_digests.emplace_back(opt_.out, hex64(fnv1a64(cert)));
      }
      return kOk;
    }
    err_ << "ffc search: no graph found in " << r.trials_run << " trials\n";
    return kVerdictFailure;
  }

  int descend() {
    auto mode = parse_graph_mode(opt_.mode, "--mode");
    auto strategy = opt_.strategy == "exact" ? DescentStrategy::exact : DescentStrategy::sampled;
    if (strategy == DescentStrategy::sampled) {
      use_seed();
      budget("samples", opt_.samples);
    }
    DescentReport r = interlacing_descent(mode, opt_.d, opt_.m, strategy, opt_.seed, opt_.samples);
    Json steps = Json::array();
    for (const auto& s : r.steps) {
      Json js{{"program", s.program},
              {"swap", s.swap},
              {"applied", s.applied},
              {"current", bracket_to_json(s.current.lo, s.current.hi)},
              {"chosen", bracket_to_json(s.chosen.lo, s.chosen.hi)}};
      js["rejected"] = s.rejected ? bracket_to_json(s.rejected->lo, s.rejected->hi) : Json(nullptr);
      steps.push_back(std::move(js));
    }
    const auto& c = r.final_certificate;
    emit(dump(Json{{"command", "descend"},
                   {"mode", to_string(mode)},
                   {"d", opt_.d},
                   {"m", opt_.m},
                   {"strategy", opt_.strategy},
                   {"expected", poly_to_json(r.expected)},
                   {"initial", bracket_to_json(r.initial.lo, r.initial.hi)},
                   {"steps", steps},
                   {"certificate", certificate_to_json(c)}}));
    err_ << "ffc descend: " << r.steps.size() << " steps, final verdict " << to_string(c.verdict) << "\n";
    return is_ramanujan(c.verdict, false) ? kOk : kVerdictFailure;
  }

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  RunManifest manifest_;
};

/// Runs one command line (without the program name). Returns an ExitStatus.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(args, out, err).run();
}

}  // namespace ffc::cli

#endif  // FFC_TOOLS_CLI_HPP
