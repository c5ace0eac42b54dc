#pragma once

// Command-line front end. run_cli is the whole program minus process setup,
// so tests can drive it with string streams.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
// input error.

#include <filesystem>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leafdeck/construct.hpp"
#include "leafdeck/deck.hpp"
#include "leafdeck/io.hpp"
#include "leafdeck/iso.hpp"
#include "leafdeck/verify.hpp"

namespace leafdeck {

enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_usage = 2 };

namespace detail {

/// Writes to `path`, or to `out` when the path is empty.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

inline std::string reconstruction_bundle(bool reconstruction, bool equivalent,
                                         const std::map<std::string, IsoWitness, NaturalLess>& witnesses) {
  ordered_json out;
  out["reconstruction"] = reconstruction;
  out["equivalent"] = equivalent;
  ordered_json per_label = ordered_json::object();
  for (const auto& [label, f] : witnesses) {
    ordered_json map = ordered_json::object();
    for (const auto& [a, b] : f.mapping) map[std::to_string(a)] = b;
    per_label[label] = std::move(map);
  }
  out["witnesses"] = std::move(per_label);
  return out.dump(2) + "\n";
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"leafdeck: leaf decks and equivalence of labelled multigraphs"};
  app.name("leafdeck");
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build M, G or N for given r and parity");
  std::size_t r = 0;
  std::string parity_text, variant_text = "N", format = "json", out_path;
  construct->add_option("--r", r, "number of leaves")->required();
  construct->add_option("--parity", parity_text, "even or odd")->required()->check(CLI::IsMember({"even", "odd"}));
  construct->add_option("--variant", variant_text, "M, G or N")->check(CLI::IsMember({"M", "G", "N"}));
  construct->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  construct->add_option("--out", out_path, "output file (default: standard output)");

  auto* deck = app.add_subcommand("deck", "write one JSON file per leaf-removal");
  std::string deck_input, out_dir;
  deck->add_option("input", deck_input, "graph JSON")->required();
  deck->add_option("--out-dir", out_dir, "directory for deck entries")->required();

  auto* iso = app.add_subcommand("iso", "decide equivalence; prints a witness when equivalent");
  std::string iso_a, iso_b, iso_out;
  bool iso_oracle = false;
  iso->add_option("first", iso_a, "graph JSON")->required();
  iso->add_option("second", iso_b, "graph JSON")->required();
  iso->add_option("--out", iso_out, "witness file (default: standard output)");
  iso->add_flag("--oracle", iso_oracle, "cross-check with brute-force search");

  auto* recon = app.add_subcommand("reconstruction", "is the first network a leaf-reconstruction of the second");
  std::string rec_a, rec_b, rec_out;
  recon->add_option("first", rec_a, "network JSON")->required();
  recon->add_option("second", rec_b, "network JSON")->required();
  recon->add_option("--out", rec_out, "bundle file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "run the verification battery");
  std::size_t r_min = 4, r_max = 7, negative_controls = 0;
  std::uint64_t seed = 1;
  std::string report_path;
  bool timing = false, parallel = false;
  verify->add_option("--r-min", r_min, "smallest r");
  verify->add_option("--r-max", r_max, "largest r");
  verify->add_option("--report", report_path, "JSON report file");
  verify->add_option("--negative-controls", negative_controls, "random rewirings of N(even) per r");
  verify->add_option("--seed", seed, "seed for negative controls");
  verify->add_flag("--timing", timing, "include per-check timings in the report");
  verify->add_flag("--parallel", parallel, "run r values concurrently");

  auto* dot = app.add_subcommand("export-dot", "convert graph JSON to DOT");
  std::string dot_input, dot_out;
  dot->add_option("input", dot_input, "graph JSON")->required();
  dot->add_option("--out", dot_out, "output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*construct) {
      const ConstructionParams params{r, parse_parity(parity_text), parse_variant(variant_text)};
      require_leaf_count(r);
      LabeledMultigraph g;
      switch (params.variant) {
        case Variant::nonbinary:
          g = build_nonbinary(r, params.parity);
          break;
        case Variant::expanded:
          g = build_expanded(r, params.parity);
          break;
        case Variant::binary:
          g = build_binary_network(r, params.parity).graph();
          break;
      }
      const auto name = variant_text + "_" + std::to_string(r) + "_" + parity_text;
      detail::emit(out_path, format == "dot" ? write_dot(g, name) : write_graph_json(g), out);
      return exit_ok;
    }
    if (*deck) {
      const auto g = load_graph(deck_input);
      const auto entries = x_deck(g);
      std::filesystem::create_directories(out_dir);
      for (const auto& [label, entry] : entries) {
        const auto path = (std::filesystem::path(out_dir) / (label + ".json")).string();
        write_text_file(path, write_graph_json(entry));
        out << path << "\n";
      }
      return exit_ok;
    }
    if (*iso) {
      const auto a = load_graph(iso_a);
      const auto b = load_graph(iso_b);
      const auto f = are_equivalent(a, b);
      if (iso_oracle && brute_force_equivalent(a, b) != f.has_value()) {
        err << "error: search and brute-force oracle disagree\n";
        return exit_usage;
      }
      if (!f) {
        err << "not equivalent\n";
        return exit_negative;
      }
      detail::emit(iso_out, write_witness_json(*f), out);
      err << "equivalent\n";
      return exit_ok;
    }
    if (*recon) {
      const auto a = Network::from(load_graph(rec_a));
      const auto b = Network::from(load_graph(rec_b));
      require_same_labels(a, b);
      const auto witnesses = deck_witnesses(x_deck(a), x_deck(b));
      const bool equivalent = are_equivalent(a.graph(), b.graph()).has_value();
      detail::emit(rec_out, detail::reconstruction_bundle(witnesses.has_value(), equivalent,
                                                          witnesses ? *witnesses : decltype(*witnesses){}),
                   out);
      err << (witnesses ? "reconstruction" : "not a reconstruction") << (equivalent ? ", equivalent\n" : ", not equivalent\n");
      return witnesses ? exit_ok : exit_negative;
    }
    if (*verify) {
      const auto report = run_matrix(r_min, r_max, {negative_controls, seed, parallel});
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << "r=" << c.r << " " << c.name << ": " << c.detail << "\n";
      }
      if (!report_path.empty()) write_text_file(report_path, write_report_json(report, timing));
      return report.passed() ? exit_ok : exit_negative;
    }
    if (*dot) {
      const auto g = load_graph(dot_input);
      detail::emit(dot_out, write_dot(g, std::filesystem::path(dot_input).stem().string()), out);
      return exit_ok;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

inline int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace leafdeck
