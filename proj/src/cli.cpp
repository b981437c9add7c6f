#include "tburau/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tburau/errors.hpp"
#include "tburau/selftest.hpp"
#include "tburau/torsion.hpp"

namespace tburau {

namespace {

struct JobSpec {
  std::string braid_text;
  std::string colors_text;
  std::string rep_path;
  std::string route = "both";
  std::string format = "pretty";
  int drop_relator = -1;  // defaults to n
  int drop_column = -1;
  bool normalize = true;
  bool allow_nonextendable = false;
  std::uint64_t seed = 1;
};

std::vector<int> parse_colors(const std::string& text) {
  std::vector<int> colors;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument("trailing characters");
      colors.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse color '" + item + "' in '" + text + "'");
    }
  }
  if (colors.empty()) throw std::invalid_argument("--colors must list at least one color");
  return colors;
}

struct Inputs {
  ColoredBraidWord braid;
  Representation rho;
};

Inputs load_inputs(const JobSpec& job) {
  std::vector<int> colors = parse_colors(job.colors_text);
  ColoredBraidWord braid = parse_braid(job.braid_text, colors);
  if (job.rep_path.empty()) {
    return {braid, Representation::trivial(braid.strands(), braid.color_count())};
  }
  Representation rho = load_representation_file(job.rep_path, braid.color_count());
  if (rho.rank() != braid.strands())
    throw std::invalid_argument("representation rank " + std::to_string(rho.rank()) +
                                " does not match strand count " +
                                std::to_string(braid.strands()));
  return {braid, std::move(rho)};
}

nlohmann::json matrix_json(const RingMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix_pretty(const RingMatrix& m, std::ostream& out) {
  std::vector<std::size_t> widths(static_cast<std::size_t>(m.cols()), 0);
  std::vector<std::vector<std::string>> cells;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j).str());
      widths[static_cast<std::size_t>(j)] =
          std::max(widths[static_cast<std::size_t>(j)], row.back().size());
    }
    cells.push_back(std::move(row));
  }
  for (const auto& row : cells) {
    out << "[ ";
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << row[j];
      if (j + 1 < row.size()) out << std::string(widths[j] - row[j].size(), ' ') << "  ";
    }
    out << " ]\n";
  }
}

void print_matrix(const BurauMatrix& b, const JobSpec& job, std::ostream& out) {
  if (job.format == "json") {
    nlohmann::json doc;
    doc["rows"] = b.matrix.rows();
    doc["cols"] = b.matrix.cols();
    doc["block_size"] = b.dim;
    doc["entries"] = matrix_json(b.matrix);
    out << doc.dump(2) << "\n";
  } else {
    print_matrix_pretty(b.matrix, out);
  }
}

nlohmann::json torsion_json(const TorsionResult& t, bool normalize) {
  nlohmann::json doc;
  doc["route"] = t.route;
  doc["numerator"] = t.value.numerator.str();
  doc["denominator"] = t.value.denominator.str();
  doc["zero"] = t.zero;
  if (t.exact_quotient) doc["quotient"] = t.exact_quotient->str();
  if (normalize && t.normalized) doc["normalized"] = t.normalized->str();
  if (!t.notes.empty()) doc["notes"] = t.notes;
  return doc;
}

void print_torsion_pretty(const TorsionResult& t, bool normalize, std::ostream& out) {
  out << "route:       " << t.route << "\n";
  if (t.zero) out << "torsion:     0 (chain complex not acyclic)\n";
  out << "numerator:   " << t.value.numerator.str() << "\n";
  out << "denominator: " << t.value.denominator.str() << "\n";
  if (t.exact_quotient) out << "quotient:    " << t.exact_quotient->str() << "\n";
  if (normalize && t.normalized)
    out << "normalized:  " << t.normalized->str() << "   (up to +- monomial units)\n";
  for (const std::string& note : t.notes) out << "note:        " << note << "\n";
}

std::string witness_str(const UnitWitness& w, const RegistryPtr& reg) {
  LaurentPoly m = LaurentPoly::from_monomial(reg, w.monomial, Int(w.sign));
  return m.str();
}

int cmd_matrix(const JobSpec& job, bool reduced, std::ostream& out) {
  Inputs in = load_inputs(job);
  BurauMatrix b = reduced ? burau_reduced(in.rho, in.braid) : burau_unreduced(in.rho, in.braid);
  print_matrix(b, job, out);
  return 0;
}

int cmd_torsion(const JobSpec& job, std::ostream& out) {
  Inputs in = load_inputs(job);
  int n = in.braid.strands();
  int drop_r = job.drop_relator > 0 ? job.drop_relator : n;
  int drop_c = job.drop_column > 0 ? job.drop_column : n;
  std::vector<TorsionResult> results;
  if (job.route == "wada" || job.route == "both")
    results.push_back(wada_invariant(in.rho, in.braid, drop_r, drop_c));
  if (job.route == "burau" || job.route == "both")
    results.push_back(torsion_from_burau(in.rho, in.braid));
  if (job.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const TorsionResult& t : results) doc.push_back(torsion_json(t, job.normalize));
    out << doc.dump(2) << "\n";
  } else {
    bool first = true;
    for (const TorsionResult& t : results) {
      if (!first) out << "\n";
      first = false;
      print_torsion_pretty(t, job.normalize, out);
    }
  }
  return 0;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
  Inputs in = load_inputs(job);
  VerificationReport report = verify_main_theorem(in.rho, in.braid, job.drop_relator,
                                                  job.drop_column);
  if (job.format == "json") {
    nlohmann::json doc;
    doc["verdict"] = report.verdict();
    doc["applicable"] = report.applicable;
    if (!report.failing_generators.empty()) doc["failing_generators"] = report.failing_generators;
    if (report.applicable) {
      doc["lhs_numerator"] = report.lhs.numerator.str();
      doc["lhs_denominator"] = report.lhs.denominator.str();
      doc["rhs"] = report.rhs.numerator.str();
      doc["theorem_denominator"] = report.theorem_denominator.str();
      if (report.witness) doc["witness"] = witness_str(*report.witness, in.rho.registry());
      doc["wada"] = torsion_json(report.wada, job.normalize);
      doc["burau"] = torsion_json(report.burau, job.normalize);
      doc["wada_seconds"] = report.wada_seconds;
      doc["burau_seconds"] = report.burau_seconds;
    }
    if (!report.notes.empty()) doc["notes"] = report.notes;
    out << doc.dump(2) << "\n";
  } else {
    out << "verdict: " << report.verdict() << "\n";
    if (!report.applicable) {
      for (const std::string& note : report.notes) out << "note:    " << note << "\n";
      if (!report.failing_generators.empty()) {
        out << "failing generators:";
        for (int i : report.failing_generators) out << " x" << i;
        out << "\n";
      }
    } else {
      out << "lhs (wada x denominator): " << to_string(report.lhs) << "\n";
      out << "rhs det(reduced - I):     " << report.rhs.numerator.str() << "\n";
      if (report.witness)
        out << "witness (lhs = u * rhs):  u = " << witness_str(*report.witness, in.rho.registry())
            << "\n";
      if (report.wada.normalized && job.normalize)
        out << "torsion (normalized):     " << report.wada.normalized->str() << "\n";
      out << "timings: wada " << report.wada_seconds << "s, burau " << report.burau_seconds
          << "s\n";
    }
  }
  if (!report.applicable) return job.allow_nonextendable ? 0 : 1;
  return report.pass ? 0 : 1;
}

int cmd_alexander(const JobSpec& job, std::ostream& out) {
  std::vector<int> colors = parse_colors(job.colors_text);
  ColoredBraidWord braid = parse_braid(job.braid_text, colors);
  TorsionResult t = alexander_untwisted(braid);
  if (job.format == "json") {
    out << torsion_json(t, job.normalize).dump(2) << "\n";
  } else {
    print_torsion_pretty(t, job.normalize, out);
  }
  return 0;
}

int cmd_selftest(const JobSpec& job, double scale, std::ostream& out) {
  selftest::Summary summary = selftest::run_all(job.seed, scale, &out);
  int suites = static_cast<int>(summary.suites.size());
  int failed = 0;
  for (const auto& s : summary.suites)
    if (!s.pass()) ++failed;
  out << summary.total_cases() << " cases across " << suites << " suites; "
      << (summary.all_pass() ? "all passed" : std::to_string(failed) + " suites FAILED") << "\n";
  return summary.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Burau matrices and twisted Alexander polynomials of colored braid closures"};
  app.require_subcommand(1);

  JobSpec job;
  double selftest_scale = 1.0;

  auto add_common = [&job](CLI::App* cmd, bool with_rep = true) {
    cmd->add_option("--braid", job.braid_text,
                    "braid word, e.g. \"s1 s2^-1 s1^3\" (empty for the identity)");
    cmd->add_option("--colors", job.colors_text,
                    "comma-separated strand colors, e.g. 1,2,1")->required();
    if (with_rep)
      cmd->add_option("--rep", job.rep_path, "representation JSON file (default: trivial)");
    cmd->add_option("--format", job.format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
  };

  CLI::App* burau_cmd = app.add_subcommand("burau", "print the twisted Burau matrix (nk x nk)");
  add_common(burau_cmd);

  CLI::App* reduced_cmd =
      app.add_subcommand("reduced", "print the reduced twisted Burau matrix ((n-1)k x (n-1)k)");
  add_common(reduced_cmd);

  CLI::App* torsion_cmd =
      app.add_subcommand("torsion", "twisted torsion of the braid closure");
  add_common(torsion_cmd);
  torsion_cmd->add_option("--route", job.route, "computation route")
      ->check(CLI::IsMember({"wada", "burau", "both"}));
  torsion_cmd->add_option("--drop-relator", job.drop_relator, "relator dropped by the Wada route");
  torsion_cmd->add_option("--drop-column", job.drop_column, "column dropped by the Wada route");
  torsion_cmd->add_flag("--normalize,!--no-normalize", job.normalize, "toggle the unit-normalized form");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check wada * det(rho(x_1..x_n) t_{c_1}..t_{c_n} - I) = det(reduced - I) up to units");
  add_common(verify_cmd);
  verify_cmd->add_option("--drop-relator", job.drop_relator, "relator dropped by the Wada route");
  verify_cmd->add_option("--drop-column", job.drop_column, "column dropped by the Wada route");
  verify_cmd->add_flag("--allow-nonextendable", job.allow_nonextendable,
                       "exit 0 when the representation does not extend");
  verify_cmd->add_flag("--normalize,!--no-normalize", job.normalize, "toggle the unit-normalized form");

  CLI::App* alexander_cmd =
      app.add_subcommand("alexander", "untwisted Alexander polynomial of the closure");
  add_common(alexander_cmd, false);

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the randomized property and cross-route suites");
  selftest_cmd->add_option("--seed", job.seed, "random seed");
  selftest_cmd->add_option("--scale", selftest_scale, "case count multiplier");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (burau_cmd->parsed()) return cmd_matrix(job, false, out);
    if (reduced_cmd->parsed()) return cmd_matrix(job, true, out);
    if (torsion_cmd->parsed()) return cmd_torsion(job, out);
    if (verify_cmd->parsed()) return cmd_verify(job, out);
    if (alexander_cmd->parsed()) return cmd_alexander(job, out);
    if (selftest_cmd->parsed()) return cmd_selftest(job, selftest_scale, out);
  } catch (const NonExtendableError& e) {
    err << "error: " << e.what() << "\n";
    return job.allow_nonextendable ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tburau
