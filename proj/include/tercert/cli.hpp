#pragma once

// Command-line front end. Every subcommand reads one JSON input document and
// writes one JSON report to `out`. Exit codes:
//   certify  0 Certified / CertifiedRankOne, 1 NotCertified
//   gup      0 holds, 1 fails
//   others   0
//   any      2 on input errors or complexity-guard refusals

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tercert/certifier.hpp"
#include "tercert/errors.hpp"
#include "tercert/gup.hpp"
#include "tercert/hilbert.hpp"
#include "tercert/io.hpp"
#include "tercert/oracle.hpp"
#include "tercert/prooflab.hpp"

namespace tercert::cli {

using io::json;

struct Flags {
  unsigned parallel = 1;
  bool modular_prefilter = false;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 1;
};

namespace detail {

inline json read_document(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    buf << file.rdbuf();
  }
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("input document must be a JSON object");
  return doc;
}

/// Rejects missing required keys and keys the subcommand does not use.
inline void require_keys(const json& doc, const std::string& cmd, const std::vector<std::string>& required,
                         const std::vector<std::string>& optional) {
  std::set<std::string> allowed(required.begin(), required.end());
  allowed.insert(optional.begin(), optional.end());
  allowed.insert("field");
  for (const auto& key : required)
    if (!doc.contains(key)) throw InputError(cmd + " input needs \"" + key + "\"");
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) throw InputError(cmd + " input does not take \"" + key + "\"");
}

inline unsigned read_degree(const json& doc) {
  const auto& d = doc.at("d");
  if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1 || d.get<std::uint64_t>() > 1000)
    throw InputError("\"d\" must be an integer degree between 1 and 1000");
  return d.get<unsigned>();
}

inline std::uint64_t read_cap(const json& doc, const Flags& flags) {
  if (flags.cap) return *flags.cap;
  if (doc.contains("cap")) {
    if (!doc.at("cap").is_number_unsigned()) throw InputError("\"cap\" must be a non-negative integer");
    return doc.at("cap").get<std::uint64_t>();
  }
  return 10'000'000;
}

inline EliminationOptions elim_options(const Flags& flags) {
  EliminationOptions e;
  e.modular_prefilter = flags.modular_prefilter;
  return e;
}

template <ExactField F>
int run_certify(const F& field, const json& doc, const Flags& flags, std::ostream& out) {
  require_keys(doc, "certify", {"d", "decomposition"}, {"form", "cap"});
  const unsigned d = read_degree(doc);
  const auto dec = io::parse_decomposition(field, d, doc.at("decomposition"));
  std::optional<TernaryForm<F>> form;
  if (doc.contains("form")) form = io::parse_form(field, d, doc.at("form"));
  CertifyOptions opts;
  opts.gup.elim = elim_options(flags);
  opts.gup.cap = read_cap(doc, flags);
  opts.gup.workers = flags.parallel;
  const auto cert = certify(form, dec, opts);
  out << io::certificate_to_json(cert, field).dump(2) << "\n";
  return cert.certified() ? 0 : 1;
}

template <ExactField F>
int run_gup(const F& field, const json& doc, const Flags& flags, std::ostream& out) {
  require_keys(doc, "gup", {"points"}, {"cap"});
  GupOptions opts;
  opts.elim = elim_options(flags);
  opts.cap = read_cap(doc, flags);
  opts.workers = flags.parallel;
  const auto report = gup_check(field, io::parse_points(field, doc.at("points")), opts);
  json j = io::gup_to_json(report);
  j["field"] = io::field_to_json(field);
  out << j.dump(2) << "\n";
  return report.holds ? 0 : 1;
}

template <ExactField F>
int run_hilbert(const F& field, const json& doc, const Flags& flags, std::ostream& out) {
  require_keys(doc, "hilbert", {"points"}, {});
  const auto pts = io::parse_points(field, doc.at("points"));
  if (pts.empty()) throw InputError("hilbert needs at least one point");
  const auto prof = profile(field, pts, elim_options(flags));
  json j = io::profile_to_json(prof);
  j["field"] = io::field_to_json(field);
  out << j.dump(2) << "\n";
  return 0;
}

template <ExactField F>
int run_prooflab(const F& field, const json& doc, const Flags& flags, std::ostream& out) {
  require_keys(doc, "prooflab", {"d", "decomposition", "decomposition2"}, {"form", "cap"});
  const unsigned d = read_degree(doc);
  const auto dec1 = io::parse_decomposition(field, d, doc.at("decomposition"));
  const auto dec2 = io::parse_decomposition(field, d, doc.at("decomposition2"));
  const auto f = doc.contains("form") ? io::parse_form(field, d, doc.at("form")) : synthesize(dec1);
  CurveSearchOptions opts;
  opts.elim = elim_options(flags);
  opts.cap = read_cap(doc, flags);
  opts.workers = flags.parallel;
  out << io::pair_analysis_to_json(analyze_pair(f, dec1, dec2, opts), field).dump(2) << "\n";
  return 0;
}

inline int run_oracle(const io::AnyField& any, const json& doc, const Flags& flags, std::ostream& out) {
  require_keys(doc, "oracle", {"d", "form", "k"}, {"cap"});
  const auto* field = std::get_if<PrimeField>(&any);
  if (!field) throw InputError("oracle searches over a prime field; set \"field\": {\"prime\": p}");
  const unsigned d = read_degree(doc);
  if (!doc.at("k").is_number_unsigned() || doc.at("k").get<std::uint64_t>() < 1)
    throw InputError("\"k\" must be a positive integer");
  OracleOptions opts;
  opts.cap = read_cap(doc, flags);
  opts.workers = flags.parallel;
  const auto result = all_decompositions(io::parse_form(*field, d, doc.at("form")), doc.at("k").get<std::size_t>(), opts);
  out << io::search_result_to_json(result).dump(2) << "\n";
  return 0;
}

inline json bound_table(unsigned from, unsigned to) {
  json rows = json::array();
  for (unsigned d = from; d <= to; ++d)
    rows.push_back({{"d", d},
                    {"k_max", bound_k_max(d)},
                    {"k_max_all_arithmetic_checks", arithmetic_k_max(d)},
                    {"d2_plus_2d", d * d + 2 * d}});
  return json{{"criterion", "BC-ternary-GUP"}, {"rule", "8k < d^2 + 2d"}, {"table", rows}};
}

/// Random input document: k distinct points with small integer coordinates, lambda = 1.
inline json sample_document(unsigned d, std::size_t k, int range, std::uint64_t seed) {
  if (range < 1) throw InputError("--range must be positive");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> coord(-range, range);
  const RationalField field;
  PointList<RationalField> pts;
  std::size_t attempts = 0;
  while (pts.size() < k) {
    if (++attempts > 1000 * (k + 1)) throw InputError("cannot draw that many distinct points in the range");
    const int x = coord(gen), y = coord(gen), z = coord(gen);
    if (x == 0 && y == 0 && z == 0) continue;
    ProjectivePoint<RationalField> p(field, x, y, z);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  json terms = json::array();
  for (const auto& p : pts) terms.push_back({{"point", io::point_to_json(p)}, {"lambda", "1"}});
  return json{{"field", "rational"}, {"d", d}, {"decomposition", terms}};
}

}  // namespace detail

/// Parses argv, runs one subcommand, and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"tercert: identifiability certificates for ternary forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  std::uint64_t cap = 0;
  app.add_option("--parallel", flags.parallel, "worker threads for subset enumeration")->check(CLI::Range(1u, 256u));
  app.add_flag("--modular-prefilter", flags.modular_prefilter, "decide full-rank cases modulo a 31-bit prime first");
  auto* cap_opt = app.add_option("--cap", cap, "maximum number of subsets to enumerate");
  app.add_option("--seed", flags.seed, "seed for the sample generator");

  std::string input = "-";
  const std::vector<std::string> doc_commands = {"certify", "gup", "hilbert", "prooflab", "oracle"};
  const std::vector<std::string> descriptions = {
      "certify identifiability of a decomposition", "general uniform position check with witness",
      "Hilbert function of a point set", "instrument a pair of decompositions of one form",
      "exhaustive F_p search for all length-k decompositions"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < doc_commands.size(); ++i) {
    auto* sub = app.add_subcommand(doc_commands[i], descriptions[i]);
    sub->add_option("input", input, "input JSON document (default: standard input)");
    subs.push_back(sub);
  }
  unsigned from = 6, to = 10;
  auto* table = app.add_subcommand("bound-table", "largest certifiable k for a range of degrees");
  table->add_option("--from", from)->check(CLI::Range(1u, 10000u));
  table->add_option("--to", to)->check(CLI::Range(1u, 10000u));
  unsigned sample_d = 8;
  std::size_t sample_k = 9;
  int sample_range = 9;
  auto* sample = app.add_subcommand("sample", "random input document with lambda = 1 (uses --seed)");
  sample->add_option("--d", sample_d)->check(CLI::Range(1u, 1000u));
  sample->add_option("--k", sample_k)->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
  sample->add_option("--range", sample_range, "coordinates drawn from [-range, range]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    if (code == 0) {
      out << o.str();
      return 0;
    }
    err << e2.str();
    out << json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
  if (*cap_opt) flags.cap = cap;

  try {
    if (table->parsed()) {
      if (from > to) throw InputError("--from exceeds --to");
      out << detail::bound_table(from, to).dump(2) << "\n";
      return 0;
    }
    if (sample->parsed()) {
      out << detail::sample_document(sample_d, sample_k, sample_range, flags.seed).dump(2) << "\n";
      return 0;
    }
    const json doc = detail::read_document(input, in);
    const auto field = io::parse_field(doc.contains("field") ? doc.at("field") : json(nullptr));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      const auto& cmd = doc_commands[i];
      if (cmd == "oracle") return detail::run_oracle(field, doc, flags, out);
      return std::visit(
          [&](const auto& f) {
            if (cmd == "certify") return detail::run_certify(f, doc, flags, out);
            if (cmd == "gup") return detail::run_gup(f, doc, flags, out);
            if (cmd == "hilbert") return detail::run_hilbert(f, doc, flags, out);
            return detail::run_prooflab(f, doc, flags, out);
          },
          field);
    }
    return 2;
  } catch (const Error& e) {
    err << "tercert: " << e.kind() << ": " << e.what() << "\n";
    out << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "tercert: InputError: " << e.what() << "\n";
    out << json{{"error", {{"kind", "InputError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
}

}  // namespace tercert::cli
