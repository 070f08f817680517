#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "drgtight/io.hpp"

namespace drgtight::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_scalars(const std::vector<Scalar>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& csv) {
  std::vector<Scalar> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) throw ValidationError("empty scalar list");
  return out;
}

bool stdout_is_tty(const std::ostream& out) {
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

void print_array_table(const IntersectionArray& arr, const std::string& name,
                       std::ostream& out) {
  if (!name.empty()) out << name << "\n";
  out << "D = " << arr.diameter() << ", k = " << arr.k().str()
      << ", case " << to_string(detect_case(arr)) << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"i", "b_i", "c_i", "a_i"});
  for (int i = 0; i <= arr.diameter(); ++i)
    rows.push_back({std::to_string(i), arr.b(i).str(), arr.c(i).str(), arr.a(i).str()});
  std::vector<size_t> width(4, 0);
  for (const auto& row : rows)
    for (int j = 0; j < 4; ++j) width[j] = std::max(width[j], row[j].size());
  for (const auto& row : rows) {
    for (int j = 0; j < 4; ++j) {
      out << std::string(width[j] - row[j].size(), ' ') << row[j];
      out << (j == 3 ? "\n" : "  ");
    }
  }
  for (const std::string& w : arr.warnings()) out << "warning: " << w << "\n";
}

struct Options {
  std::string file;
  std::string theta;
  std::string theta2;
  std::string epsilon;
  std::string sigma;
  std::string candidates = "auto";
  double tol = 1e-9;
  bool reduced = false;
  bool approx = false;
};

Scalar parse_theta(const std::string& text, bool approx) {
  Scalar v = Scalar::parse(text);
  return approx ? v.to_approx() : v;
}

IntersectionArray load_array(const Options& opt, const Tolerance& tol) {
  ArrayDocument doc = parse_array_document(read_file(opt.file), tol);
  if (!opt.approx) return doc.array;
  std::vector<Scalar> b, c;
  for (int i = 0; i <= doc.array.diameter() - 1; ++i) b.push_back(doc.array.b(i).to_approx());
  for (int i = 1; i <= doc.array.diameter(); ++i) c.push_back(doc.array.c(i).to_approx());
  return validate_array(doc.array.diameter(), std::move(b), std::move(c), tol);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pseudo cosine sequences and tight pairs of intersection arrays"};
  app.name("drgtight");
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol,
                 "comparison tolerance T (relative T, absolute T/1000)")
      ->envname("DRGTIGHT_TOL");
  app.add_flag("--approx", opt.approx, "force approximate arithmetic even for exact input");

  auto* validate = app.add_subcommand("validate", "validate an intersection array document");
  validate->add_option("file", opt.file, "input JSON document")->required();

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, one per line, descending");
  spectrum->add_option("file", opt.file)->required();
  spectrum->add_flag("--reduced", opt.reduced, "eigenvalues of the reduced matrix instead");

  auto* pcs = app.add_subcommand("pcs", "pseudo cosine sequence for theta");
  pcs->add_option("file", opt.file)->required();
  pcs->add_option("--theta", opt.theta, "scalar: p/q, integer, or decimal")->required();

  auto* tight = app.add_subcommand("tight", "direct tight test for a pair of thetas");
  tight->add_option("file", opt.file)->required();
  tight->add_option("--theta", opt.theta)->required();
  tight->add_option("--theta2", opt.theta2)->required();

  auto* classify = app.add_subcommand("classify", "classify all tight pairs");
  classify->add_option("file", opt.file)->required();
  classify->add_option("--candidates", opt.candidates,
                       "'auto' (graph eigenvalues) or a comma-separated list");

  auto* recover = app.add_subcommand("recover",
                                     "rebuild the intersection numbers from a tight sequence");
  recover->add_option("file", opt.file)->required();
  recover->add_option("--theta", opt.theta)->required();
  recover->add_option("--epsilon", opt.epsilon, "auxiliary parameter")->required();

  auto* feasible = app.add_subcommand("feasible",
                                      "build the array determined by a feasible sequence");
  feasible->add_option("--sigma", opt.sigma, "comma-separated sigma_0,...,sigma_D")->required();
  feasible->add_option("--epsilon", opt.epsilon, "auxiliary parameter")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  const Tolerance tol{opt.tol, opt.tol * 1e-3};

  try {
    if (app.got_subcommand(validate)) {
      ArrayDocument doc = parse_array_document(read_file(opt.file), tol);
      if (stdout_is_tty(out)) {
        print_array_table(doc.array, doc.name, out);
      } else {
        nlohmann::json j = nlohmann::json::parse(array_to_json(doc.array, doc.name));
        j["case"] = to_string(detect_case(doc.array, tol));
        out << j.dump(2) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(spectrum)) {
      IntersectionArray arr = load_array(opt, tol);
      Spectrum spec = opt.reduced ? reduced_matrix_eigenvalues(arr, tol)
                                  : graph_eigenvalues(arr, tol);
      for (const Scalar& v : spec.values) out << v.str() << "\n";
      return 0;
    }

    if (app.got_subcommand(pcs)) {
      IntersectionArray arr = load_array(opt, tol);
      PseudoCosineSeq s = pseudo_cosine_sequence(arr, parse_theta(opt.theta, opt.approx));
      out << join_scalars(s.sigma) << "\n";
      return 0;
    }

    if (app.got_subcommand(tight)) {
      IntersectionArray arr = load_array(opt, tol);
      PseudoCosineSeq s = pseudo_cosine_sequence(arr, parse_theta(opt.theta, opt.approx));
      PseudoCosineSeq r = pseudo_cosine_sequence(arr, parse_theta(opt.theta2, opt.approx));
      auto w = is_tight_pair(arr, s, r, tol);
      if (!w) {
        out << "not tight\n";
        return 0;
      }
      out << "tight\n";
      out << "gamma: " << join_scalars(w->product) << "\n";
      out << "psi: " << w->psi.str() << "\n";
      out << "epsilon: " << w->epsilon.str() << "\n";
      return 0;
    }

    if (app.got_subcommand(classify)) {
      IntersectionArray arr = load_array(opt, tol);
      std::optional<std::vector<Scalar>> candidates;
      if (opt.candidates != "auto") candidates = parse_scalar_list(opt.candidates);
      ClassificationReport rep = classify_tight_pairs(arr, candidates, tol);
      out << report_to_json(rep) << "\n";
      return 0;
    }

    if (app.got_subcommand(recover)) {
      IntersectionArray arr = load_array(opt, tol);
      PseudoCosineSeq s = pseudo_cosine_sequence(arr, parse_theta(opt.theta, opt.approx));
      Scalar eps = parse_theta(opt.epsilon, opt.approx);
      // When theta is an eigenvalue the terminal condition pins c_D too.
      const bool complete = is_cosine_sequence(arr, s, tol);
      IntersectionArray rebuilt = recover_intersection_numbers(s, eps, tol, complete);
      out << array_to_json(rebuilt) << "\n";
      return 0;
    }

    if (app.got_subcommand(feasible)) {
      std::vector<Scalar> sigma = parse_scalar_list(opt.sigma);
      if (opt.approx)
        for (Scalar& v : sigma) v = v.to_approx();
      Scalar eps = parse_theta(opt.epsilon, opt.approx);
      IntersectionArray rebuilt = feasible_array_from_sequence(sigma, eps, tol);
      out << array_to_json(rebuilt) << "\n";
      return 0;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "no subcommand given\n";
  return 1;
}

}  // namespace drgtight::cli
