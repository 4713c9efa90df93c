#include <chw/cli.hpp>

#include <chw/automorphisms.hpp>
#include <chw/cohomology.hpp>
#include <chw/parser.hpp>
#include <chw/verification.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace chw::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json json_matrix(const IntMatrix& m) {
  auto rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_int(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json json_ints(const std::vector<Integer>& values) {
  auto out = ordered_json::array();
  for (const auto& v : values) out.push_back(json_int(v));
  return out;
}

std::string join_words(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string word_text(const ReducedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Gen i : w.letters()) out += (out.empty() ? "x" : " x") + std::to_string(i);
  return out;
}

std::string bits_text(const CohClass& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.bits.size(); ++k) out += (k ? "," : "") + std::to_string(c.bits[k]);
  return out + "]";
}

Integer parse_integer_text(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(k), s.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw std::invalid_argument("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

IntMatrix matrix_from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix has no rows");
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw std::invalid_argument("matrix rows have different lengths");
  if (rows.front().empty()) throw std::invalid_argument("matrix has no columns");
  return IntMatrix::from_rows(rows);
}

void print_matrix_rows(std::ostream& out, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c);
    out << "]\n";
  }
}

}  // namespace

IntMatrix read_matrix_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("matrix file is empty");
  std::vector<std::vector<Integer>> rows;
  if (text[first] == '[') {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("bad JSON matrix: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("JSON matrix must be an array of arrays");
    for (const auto& row : j) {
      if (!row.is_array()) throw std::invalid_argument("JSON matrix must be an array of arrays");
      std::vector<Integer> r;
      for (const auto& v : row) {
        if (v.is_number_integer())
          r.push_back(parse_integer_text(v.dump()));
        else if (v.is_string())
          r.push_back(parse_integer_text(v.get<std::string>()));
        else
          throw std::invalid_argument("JSON matrix entry is not an integer: " + v.dump());
      }
      rows.push_back(std::move(r));
    }
    return matrix_from_rows(rows);
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<Integer> r;
    std::string field;
    while (fields >> field) r.push_back(parse_integer_text(field));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return matrix_from_rows(rows);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in combinatorial Hantzsche-Wendt groups G_n.", "chw"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::vector<std::string> word_parts;
  std::string auto_text;
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool json = false;
  std::string file;
  std::size_t len = 0;
  std::size_t box = 0;

  auto rank_option = [&](CLI::App* sub) {
    sub->add_option("--n", n, "rank of G_n")->required()->check(CLI::Range(1, 4096));
  };

  auto* nf = app.add_subcommand("nf", "print the normal form of a word");
  rank_option(nf);
  nf->add_option("word", word_parts, "word such as \"x1^-1 x2^2\"")->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply an automorphism word to a word");
  rank_option(apply_cmd);
  apply_cmd->add_option("--auto", auto_text, "automorphism word, rightmost token acts first")
      ->required();
  apply_cmd->add_option("word", word_parts, "word")->required();

  auto* induced_cmd = app.add_subcommand("induced", "maps induced on W and on A");
  rank_option(induced_cmd);
  induced_cmd->add_option("--auto", auto_text, "automorphism word")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  rank_option(verify);
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"autw", "monoid", "autg", "outg", "structure", "all"}));
  verify->add_option("--seed", seed, "seed for randomized samples");
  verify->add_flag("--json", json, "JSON report");

  auto* h1 = app.add_subcommand("h1", "H^1(W, A)");
  rank_option(h1);
  h1->add_flag("--json", json, "JSON output");

  auto* h2 = app.add_subcommand("h2", "H^2(W, A) and the class of G_n");
  rank_option(h2);
  h2->add_flag("--json", json, "JSON output");

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--file", file, "rows of integers, or a JSON array of arrays")->required();
  snf->add_flag("--json", json, "JSON output");

  auto* ball = app.add_subcommand("ball", "size of a normal-form box");
  rank_option(ball);
  ball->add_option("--len", len, "maximum word length")->required();
  ball->add_option("--box", box, "bound on shift coordinates")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (nf->parsed()) {
      out << to_string(parse_element(join_words(word_parts), n)) << '\n';
    } else if (apply_cmd->parsed()) {
      const GEndomorphism phi = evaluate(parse_autoword(auto_text, n));
      out << to_string(apply(phi, parse_element(join_words(word_parts), n))) << '\n';
    } else if (induced_cmd->parsed()) {
      const GEndomorphism phi = evaluate(parse_autoword(auto_text, n));
      const WAutomorphism w = induced_w(phi);
      out << "W-images:\n";
      for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
        out << "  x" << i << " -> " << word_text(w.image(i)) << '\n';
      out << "A-matrix (row i is the image of x_i^2):\n";
      print_matrix_rows(out, induced_matrix(phi));
    } else if (verify->parsed()) {
      if (n < kMinVerifyRank - (suite == "monoid" ? 1 : 0) || n > kMaxVerifyRank)
        throw std::invalid_argument("verify needs " +
                                    std::to_string(kMinVerifyRank) + " <= n <= " +
                                    std::to_string(kMaxVerifyRank));
      std::vector<SuiteReport> reports;
      if (suite == "all")
        reports = run_all(n, seed);
      else
        reports.push_back(run_suite(suite, n, seed));
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok();
      if (json) {
        if (suite == "all") {
          auto arr = ordered_json::array();
          for (const auto& r : reports) arr.push_back(to_json(r));
          out << arr.dump(2) << '\n';
        } else {
          out << to_json(reports.front()).dump(2) << '\n';
        }
      } else {
        for (const auto& r : reports) out << to_text(r);
      }
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (h1->parsed()) {
      const CokernelInvariants inv = h1_w(n);
      if (json) {
        ordered_json j;
        j["n"] = n;
        j["free_rank"] = inv.free_rank;
        j["torsion"] = json_ints(inv.torsion);
        j["group"] = format_abelian(inv);
        out << j.dump(2) << '\n';
      } else {
        out << format_abelian(inv) << '\n';
      }
    } else if (h2->parsed()) {
      CokernelInvariants total;
      for (const auto& t : h2_w(n)) total.torsion.insert(total.torsion.end(), t.begin(), t.end());
      const auto classes = torsion_free_classes(n);
      const CohClass gamma = extension_class(n);
      if (json) {
        ordered_json j;
        j["n"] = n;
        j["torsion"] = json_ints(total.torsion);
        j["group"] = format_abelian(total);
        auto cls = ordered_json::array();
        for (const auto& c : classes) cls.push_back(c.bits);
        j["torsion_free_classes"] = std::move(cls);
        j["extension_class"] = gamma.bits;
        out << j.dump(2) << '\n';
      } else {
        out << format_abelian(total) << '\n';
        out << "torsion-free classes:";
        for (const auto& c : classes) out << ' ' << bits_text(c);
        out << "\nextension class: " << bits_text(gamma) << '\n';
      }
    } else if (snf->parsed()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot read " + file);
      std::ostringstream buf;
      buf << in.rdbuf();
      const IntMatrix m = read_matrix_text(buf.str());
      const SNFResult r = smith_normal_form(m);
      const CokernelInvariants inv = cokernel_invariants(m);
      if (json) {
        ordered_json j;
        j["D"] = json_matrix(r.D);
        j["U"] = json_matrix(r.U);
        j["V"] = json_matrix(r.V);
        j["factors"] = json_ints(r.factors);
        j["free_rank"] = inv.free_rank;
        j["torsion"] = json_ints(inv.torsion);
        out << j.dump(2) << '\n';
      } else {
        out << "D:\n";
        print_matrix_rows(out, r.D);
        out << "U:\n";
        print_matrix_rows(out, r.U);
        out << "V:\n";
        print_matrix_rows(out, r.V);
        out << "factors:";
        for (const auto& f : r.factors) out << ' ' << f;
        out << "\ncokernel: " << format_abelian(inv) << '\n';
      }
    } else if (ball->parsed()) {
      out << ball_size(n, len, box) << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace chw::cli
