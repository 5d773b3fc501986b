#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "numfactor/numfactor.hpp"
#include "svg_plot.hpp"

namespace numfactor::cli {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::int64_t>& xs, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_vector(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size() || token.empty() || v < 0)
      throw UsageError("bad entry '" + token + "' in factorization '" + text +
                       "' (expected comma-separated nonnegative integers)");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty factorization '" + text + "'");
  return out;
}

Factorization parse_factorization(const NumericalMonoid& monoid,
                                  const std::string& text, std::int64_t n) {
  Factorization z{parse_vector(text)};
  if (z.value(monoid) != n)
    throw Error(Errc::NotAFactorization,
                to_string(z) + " does not factor " + std::to_string(n));
  return z;
}

std::string scan_value_text(const ScanValue& value) {
  if (std::holds_alternative<std::int64_t>(value))
    return std::to_string(std::get<std::int64_t>(value));
  return join(std::get<std::vector<std::int64_t>>(value), ';');
}

ordered_json scan_value_json(const ScanValue& value) {
  if (std::holds_alternative<std::int64_t>(value))
    return std::get<std::int64_t>(value);
  return std::get<std::vector<std::int64_t>>(value);
}

Invariant parse_invariant(const std::string& token) {
  if (token == "catenary") return Invariant::Catenary;
  if (token == "tame") return Invariant::Tame;
  if (token == "delta") return Invariant::Delta;
  if (token == "maxlen") return Invariant::MaxLength;
  if (token == "minlen") return Invariant::MinLength;
  throw UsageError("unknown invariant '" + token + "'");
}

ordered_json factorization_json(const Factorization& z) {
  return z.multiplicities();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"factorization invariants of numerical monoids"};
  app.name("numfactor");

  std::vector<std::int64_t> gens;
  std::string format = "text";
  std::string output_path;
  std::size_t cache_size = NumericalMonoid::kDefaultCacheCapacity;
  unsigned threads = 0;

  app.add_option("--gens", gens, "monoid generators, comma separated")
      ->required()
      ->delimiter(',');
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--output", output_path, "write data to this file instead of stdout");
  app.add_option("--cache-size", cache_size, "factorization cache capacity")
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "worker threads for scans (0 = available parallelism)")
      ->capture_default_str();
  app.require_subcommand(1);

  auto* cmd_info = app.add_subcommand(
      "info", "generators, Frobenius number, Apery set, elasticity, Betti elements");

  std::int64_t fz_n = 0;
  auto* cmd_factorizations =
      app.add_subcommand("factorizations", "list Z(n), one vector per line");
  cmd_factorizations->add_option("n", fz_n, "element of the monoid")->required();

  std::int64_t len_n = 0;
  auto* cmd_lengths = app.add_subcommand("lengths", "length set invariants of n");
  cmd_lengths->add_option("n", len_n, "element of the monoid")->required();

  std::int64_t delta_n = 0;
  auto* cmd_delta = app.add_subcommand("delta", "delta set of n");
  cmd_delta->add_option("n", delta_n, "element of the monoid")->required();

  std::int64_t dist_n = 0;
  std::string dist_z1, dist_z2;
  auto* cmd_distance =
      app.add_subcommand("distance", "distance between two factorizations of n");
  cmd_distance->add_option("n", dist_n, "element of the monoid")->required();
  cmd_distance->add_option("z1", dist_z1, "factorization, e.g. 9,1,2")->required();
  cmd_distance->add_option("z2", dist_z2, "factorization, e.g. 0,7,2")->required();

  std::int64_t chain_n = 0, chain_max_link = 0;
  std::string chain_z1, chain_z2;
  auto* cmd_chain =
      app.add_subcommand("chain", "N-chain between two factorizations of n");
  cmd_chain->add_option("n", chain_n, "element of the monoid")->required();
  cmd_chain->add_option("z1", chain_z1, "start factorization")->required();
  cmd_chain->add_option("z2", chain_z2, "end factorization")->required();
  cmd_chain->add_option("--max-link", chain_max_link, "largest allowed link length")
      ->required();

  std::int64_t cat_n = 0;
  bool cat_monoid = false;
  auto* cmd_catenary = app.add_subcommand("catenary", "catenary degree of n or of the monoid");
  cmd_catenary->add_option("n", cat_n, "element of the monoid");
  cmd_catenary->add_flag("--monoid", cat_monoid, "catenary degree of the whole monoid");

  std::int64_t tame_n = 0, tame_atom = -1;
  bool tame_monoid = false;
  auto* cmd_tame = app.add_subcommand("tame", "tame degree of n or of the monoid");
  cmd_tame->add_option("n", tame_n, "element of the monoid");
  cmd_tame->add_option("--atom", tame_atom, "restrict to this atom (by value)");
  cmd_tame->add_flag("--monoid", tame_monoid, "tame degree of the whole monoid");

  bool betti_cands = false;
  auto* cmd_betti = app.add_subcommand("betti", "Betti elements, one per line");
  cmd_betti->add_flag("--candidates", betti_cands,
                      "print the unfiltered candidate pool instead");

  auto* cmd_presentation =
      app.add_subcommand("presentation", "one canonical minimal presentation");

  std::string scan_inv;
  std::int64_t scan_to = 0;
  auto* cmd_scan = app.add_subcommand("scan", "invariant over every element up to a bound");
  cmd_scan->add_option("invariant", scan_inv, "one of catenary|tame|delta|maxlen|minlen")
      ->required()
      ->check(CLI::IsMember({"catenary", "tame", "delta", "maxlen", "minlen"}));
  cmd_scan->add_option("--to", scan_to, "scan elements up to this bound")->required();

  std::string period_inv;
  std::int64_t period_guard = 2, period_to = 0;
  auto* cmd_period =
      app.add_subcommand("period", "eventual periodicity of an invariant sequence");
  cmd_period->add_option("invariant", period_inv, "one of catenary|tame")
      ->required()
      ->check(CLI::IsMember({"catenary", "tame"}));
  cmd_period->add_option("--guard", period_guard,
                         "periods of evidence required past the onset (>= 2)")
      ->capture_default_str();
  cmd_period->add_option("--to", period_to,
                         "scan exactly this far (default: grow until verified)");

  // Global flags may appear after the verb, e.g. `scan tame --format csv`.
  for (auto* sub : {cmd_info, cmd_factorizations, cmd_lengths, cmd_delta,
                    cmd_distance, cmd_chain, cmd_catenary, cmd_tame, cmd_betti,
                    cmd_presentation, cmd_scan, cmd_period})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    const std::string command = app.get_subcommands().front()->get_name();
    if ((format == "csv" || format == "svg") && command != "scan")
      throw UsageError("--format " + format + " is only valid for scan");
    if (period_guard < 2) throw UsageError("--guard must be at least 2");

    const NumericalMonoid monoid(gens, cache_size);

    std::string text;   // text format payload
    ordered_json result;  // json format payload
    std::string raw;    // csv / svg payload (scan only)

    if (app.got_subcommand(cmd_info)) {
      const AperySet ap = monoid.apery_set(monoid.min_generator());
      const auto betti = betti_elements(monoid);
      const std::string elasticity = to_string(monoid_elasticity(monoid));
      text += "generators: " + join(monoid.generators()) + "\n";
      if (!monoid.discarded().empty())
        text += "discarded: " + join(monoid.discarded()) + "\n";
      text += "frobenius: " + std::to_string(monoid.frobenius()) + "\n";
      text += "elasticity: " + elasticity + "\n";
      text += "apery(" + std::to_string(ap.modulus) + "): " + join(ap.elements) + "\n";
      text += "betti: " + join(betti) + "\n";
      result["generators"] = monoid.generators();
      result["discarded"] = monoid.discarded();
      result["frobenius"] = monoid.frobenius();
      result["elasticity"] = elasticity;
      result["apery"] = ordered_json{{"modulus", ap.modulus}, {"elements", ap.elements}};
      result["betti"] = betti;
    } else if (app.got_subcommand(cmd_factorizations)) {
      const auto zset = factorizations(monoid, fz_n);
      result = ordered_json::array();
      for (const auto& z : zset->factorizations()) {
        text += join(z.multiplicities()) + "\n";
        result.push_back(factorization_json(z));
      }
    } else if (app.got_subcommand(cmd_lengths)) {
      const LengthProfile profile = length_profile(*factorizations(monoid, len_n));
      const std::string elasticity = to_string(profile.elasticity);
      text += "lengths: " + join(profile.lengths) + "\n";
      text += "min: " + std::to_string(profile.min_length) + "\n";
      text += "max: " + std::to_string(profile.max_length) + "\n";
      text += "elasticity: " + elasticity + "\n";
      text += "delta: " + join(profile.delta) + "\n";
      result["lengths"] = profile.lengths;
      result["min"] = profile.min_length;
      result["max"] = profile.max_length;
      result["elasticity"] = elasticity;
      result["delta"] = profile.delta;
    } else if (app.got_subcommand(cmd_delta)) {
      const auto delta = delta_set(monoid, delta_n);
      if (!delta.empty()) text += join(delta) + "\n";
      result = delta;
    } else if (app.got_subcommand(cmd_distance)) {
      const Factorization z1 = parse_factorization(monoid, dist_z1, dist_n);
      const Factorization z2 = parse_factorization(monoid, dist_z2, dist_n);
      const std::int64_t d = distance(z1, z2);
      text = std::to_string(d) + "\n";
      result = d;
    } else if (app.got_subcommand(cmd_chain)) {
      const Factorization z1 = parse_factorization(monoid, chain_z1, chain_n);
      const Factorization z2 = parse_factorization(monoid, chain_z2, chain_n);
      const auto chain = n_chain(monoid, chain_n, z1, z2, chain_max_link);
      if (!chain) {
        text = "none\n";
        result = nullptr;
      } else {
        ordered_json links = ordered_json::array();
        for (const auto& z : chain->links) {
          text += join(z.multiplicities()) + "\n";
          links.push_back(factorization_json(z));
        }
        text += "links:";
        if (!chain->link_lengths.empty()) text += " " + join(chain->link_lengths);
        text += "\n";
        result["links"] = links;
        result["link_lengths"] = chain->link_lengths;
      }
    } else if (app.got_subcommand(cmd_catenary)) {
      const bool has_n = cmd_catenary->count("n") > 0;
      if (has_n == cat_monoid)
        throw UsageError("catenary needs exactly one of n or --monoid");
      const std::int64_t c =
          cat_monoid ? catenary_degree_monoid(monoid) : catenary_degree(monoid, cat_n);
      text = std::to_string(c) + "\n";
      result = c;
    } else if (app.got_subcommand(cmd_tame)) {
      const bool has_n = cmd_tame->count("n") > 0;
      const bool has_atom = cmd_tame->count("--atom") > 0;
      if (has_n == tame_monoid)
        throw UsageError("tame needs exactly one of n or --monoid");
      if (tame_monoid && has_atom)
        throw UsageError("--atom cannot be combined with --monoid");
      std::int64_t t = 0;
      if (tame_monoid)
        t = tame_degree_monoid(monoid);
      else if (has_atom)
        t = tame_wrt(monoid, tame_n, monoid.atom_index(tame_atom));
      else
        t = tame_degree(monoid, tame_n);
      text = std::to_string(t) + "\n";
      result = t;
    } else if (app.got_subcommand(cmd_betti)) {
      const auto elems =
          betti_cands ? betti_candidates(monoid) : betti_elements(monoid);
      for (std::int64_t b : elems) text += std::to_string(b) + "\n";
      result = elems;
    } else if (app.got_subcommand(cmd_presentation)) {
      const Presentation presentation = minimal_presentation(monoid);
      result = ordered_json::array();
      for (const auto& rel : presentation.relations) {
        text += std::to_string(rel.element) + ": " + join(rel.left.multiplicities()) +
                " ~ " + join(rel.right.multiplicities()) + "\n";
        result.push_back(ordered_json{{"element", rel.element},
                                      {"left", factorization_json(rel.left)},
                                      {"right", factorization_json(rel.right)}});
      }
    } else if (app.got_subcommand(cmd_scan)) {
      const Invariant invariant = parse_invariant(scan_inv);
      const InvariantSeries series = scan(monoid, invariant, scan_to, threads);
      if (format == "csv") {
        raw = "n," + scan_inv + "\n";
        for (std::size_t i = 0; i < series.elements.size(); ++i)
          raw += std::to_string(series.elements[i]) + "," +
                 scan_value_text(series.values[i]) + "\n";
      } else if (format == "svg") {
        std::vector<std::pair<std::int64_t, std::int64_t>> points;
        for (std::size_t i = 0; i < series.elements.size(); ++i) {
          const ScanValue& v = series.values[i];
          if (std::holds_alternative<std::int64_t>(v)) {
            points.emplace_back(series.elements[i], std::get<std::int64_t>(v));
          } else {
            for (std::int64_t d : std::get<std::vector<std::int64_t>>(v))
              points.emplace_back(series.elements[i], d);
          }
        }
        raw = svg_scatter("n", scan_inv, points);
      } else {
        result = ordered_json::array();
        for (std::size_t i = 0; i < series.elements.size(); ++i) {
          text += std::to_string(series.elements[i]) + " " +
                  scan_value_text(series.values[i]) + "\n";
          result.push_back(ordered_json{{"n", series.elements[i]},
                                        {"value", scan_value_json(series.values[i])}});
        }
      }
    } else if (app.got_subcommand(cmd_period)) {
      const Invariant invariant = parse_invariant(period_inv);
      const std::int64_t lcm = monoid.lcm_generators();
      const std::int64_t base = std::max<std::int64_t>(monoid.frobenius() + 1, 1);
      std::int64_t up_to = period_to > 0 ? period_to : base + (period_guard + 1) * lcm;
      PeriodicityResult detected;
      for (int attempt = 0;; ++attempt) {
        try {
          detected = detect_period(scan(monoid, invariant, up_to, threads), lcm,
                                   period_guard);
          break;
        } catch (const Error& e) {
          if (e.code() != Errc::WindowTooShort || period_to > 0 || attempt >= 5)
            throw;
          up_to *= 2;
        }
      }
      text += "invariant: " + detected.invariant_name + "\n";
      text += "onset: " + std::to_string(detected.onset) + "\n";
      text += "period: " + std::to_string(detected.period) + "\n";
      text += "verified_through: " + std::to_string(detected.verified_through) + "\n";
      result["invariant"] = detected.invariant_name;
      result["onset"] = detected.onset;
      result["period"] = detected.period;
      result["verified_through"] = detected.verified_through;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
      file.open(output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file '" << output_path << "'\n";
        return 1;
      }
      sink = &file;
    }
    if (format == "json") {
      ordered_json envelope;
      envelope["monoid"] = monoid.generators();
      envelope["command"] = command;
      envelope["result"] = result;
      *sink << envelope.dump() << "\n";
    } else if (format == "text") {
      *sink << text;
    } else {
      *sink << raw;
    }
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace numfactor::cli
