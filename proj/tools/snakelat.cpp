#include "snakelat/chain_poly.hpp"
#include "snakelat/ehrhart.hpp"
#include "snakelat/hstar.hpp"
#include "snakelat/ideal_lattice.hpp"
#include "snakelat/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace snakelat;
using json = nlohmann::ordered_json;

namespace {

SnakeWord read_word(const std::string& text) {
  SnakeWord w = SnakeWord::parse(text);
  if (w.length() > max_word_length())
    throw SizeGuardError("word length " + std::to_string(w.length()) + " exceeds limit " +
                         std::to_string(max_word_length()) + " (set SNAKELAT_MAX_N to raise it)");
  return w;
}

json header(const std::string& command, const SnakeWord& w) {
  json j;
  j["schema"] = "snakelat/1";
  j["command"] = command;
  j["word"] = w.str();
  const SnakeWord c = canonicalize(w);
  j["canonical"] = c.str();
  if (!(c == w)) j["note"] = "input canonicalized to " + c.str() + " (complement has the same invariants)";
  j["n"] = w.length();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_info(const std::string& text) {
  const SnakeWord w = read_word(text);
  json j = header("info", w);
  const IdealLattice lat = IdealLattice::build(w);
  j["dimension"] = 2 * w.length() + 4;
  j["ideal_count"] = lat.size();
  j["volume"] = to_string(hstar_recurrence(w).evaluate(BigInt(1)));
  j["gorenstein_index"] = w.length() + 4;
  j["ladder"] = w.is_ladder();
  j["snake"] = w.is_snake();
  emit(j);
  return 0;
}

HStarMethod parse_method(const std::string& m) {
  if (m == "auto" || m == "recurrence") return HStarMethod::Recurrence;
  if (m == "ascents") return HStarMethod::Ascents;
  if (m == "red-turns") return HStarMethod::RedTurns;
  if (m == "chain") return HStarMethod::ChainTransform;
  if (m == "closed") return HStarMethod::ClosedForm;
  throw Error("unknown method '" + m + "'");
}

int cmd_hstar(const std::string& text, const std::string& method, bool verify_all) {
  const SnakeWord w = read_word(text);
  json j = header("hstar", w);
  const HStarResult r = compute_hstar(w, parse_method(method));
  j["method"] = to_string(r.method);
  j["hstar"] = coefficient_strings(r.h);
  if (!verify_all) {
    emit(j);
    return 0;
  }
  json methods;
  bool agree = true;
  for (HStarMethod m : {HStarMethod::ClosedForm, HStarMethod::Recurrence, HStarMethod::ChainTransform,
                        HStarMethod::Ascents, HStarMethod::RedTurns}) {
    if (!method_applicable(w, m)) continue;
    const IntPolynomial h = compute_hstar(w, m).h;
    methods[to_string(m)] = coefficient_strings(h);
    agree = agree && h == r.h;
  }
  j["methods"] = methods;
  j["agree"] = agree;
  emit(j);
  return agree ? 0 : 1;
}

std::string factored_form(const RatPolynomial& L) {
  const auto roots = integer_roots_with_multiplicity(L);
  RatPolynomial rest = make_monic(L);
  std::string s = "(" + to_string(L.leading()) + ")";
  for (const auto& [r, m] : roots) {
    const BigInt a = -r;
    s += "(t" + (a == 0 ? std::string() : (a > 0 ? "+" : "") + to_string(a)) + ")";
    if (m > 1) s += "^" + std::to_string(m);
    for (int i = 0; i < m; ++i) rest = divide_exact(rest, to_rational(IntPolynomial({a, BigInt(1)})));
  }
  if (rest.degree() > 0) s += "(" + format(rest, 't') + ")";
  return s;
}

int cmd_ehrhart(const std::string& text) {
  const SnakeWord w = read_word(text);
  json j = header("ehrhart", w);
  const EhrhartRecord e = ehrhart_polynomial(w);
  j["dimension"] = e.dimension;
  j["ehrhart"] = coefficient_strings(e.L);
  j["hstar"] = coefficient_strings(e.hstar);
  j["volume"] = to_string(e.normalized_volume);
  j["gorenstein_index"] = e.gorenstein_index;
  json roots = json::array();
  for (const auto& [r, m] : integer_roots_with_multiplicity(e.L))
    roots.push_back({{"root", to_string(r)}, {"multiplicity", m}});
  j["integer_roots"] = roots;
  j["factored"] = factored_form(e.L);
  emit(j);
  return 0;
}

int cmd_chain(const std::string& text, const std::string& method) {
  const SnakeWord w = read_word(text);
  json j = header("chain", w);
  const IdealLattice lat = IdealLattice::build(w);
  j["dimension"] = 2 * w.length() + 4;
  IntPolynomial c;
  if (method == "paths" || method == "auto")
    c = valid_path_weight(lat);
  else if (method == "heights")
    c = chain_polynomial_heights(lat);
  else if (method == "bruteforce")
    c = chain_polynomial_bruteforce(lat);
  else if (method == "all") {
    c = chain_polynomial_bruteforce(lat);
    const bool agree = c == chain_polynomial_heights(lat) && c == valid_path_weight(lat);
    j["method"] = "all";
    j["chain"] = coefficient_strings(c);
    j["agree"] = agree;
    emit(j);
    return agree ? 0 : 1;
  } else {
    throw Error("unknown chain method '" + method + "'");
  }
  j["method"] = method == "auto" ? "paths" : method;
  j["chain"] = coefficient_strings(c);
  emit(j);
  return 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  out << body;
  if (!out) {
    std::cerr << "error: failed writing " << path << "\n";
    return 2;
  }
  return 0;
}

int cmd_verify(std::size_t max_length, const std::string& suite, unsigned jobs, const std::string& out) {
  if (max_length > max_word_length())
    throw SizeGuardError("--max-length " + std::to_string(max_length) + " exceeds limit " +
                         std::to_string(max_word_length()) + " (set SNAKELAT_MAX_N to raise it)");
  VerifyOptions opts{max_length, parse_suite(suite), jobs};
  const Report rep = run_verification(opts);
  const std::string body = ends_with(out, ".csv") ? to_csv(rep) : to_json(rep).dump(2) + "\n";
  if (const int rc = write_output(out, body)) return rc;
  std::cerr << "verified " << rep.word_count << " words: " << rep.theorem_failures() << " theorem failures, "
            << rep.conjecture_failures() << " conjecture counterexamples\n";
  return rep.theorem_failures() == 0 ? 0 : 1;
}

int cmd_sweep(std::size_t max_length, unsigned jobs, const std::string& out) {
  if (max_length > max_word_length())
    throw SizeGuardError("--max-length " + std::to_string(max_length) + " exceeds limit " +
                         std::to_string(max_word_length()));
  const auto words = canonical_words_up_to(max_length);
  std::vector<json> rows(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) {
    const IntPolynomial h = hstar_recurrence(words[i]);
    json r;
    r["word"] = words[i].str();
    r["n"] = words[i].length();
    r["hstar"] = coefficient_strings(h);
    r["volume"] = to_string(h.evaluate(BigInt(1)));
    rows[i] = std::move(r);
  });
  json j;
  j["schema"] = "snakelat/1";
  j["command"] = "sweep";
  j["max_length"] = max_length;
  j["words"] = rows;
  std::string body;
  if (ends_with(out, ".csv")) {
    body = "word,n,volume,hstar\n";
    for (const auto& r : rows) {
      std::string h;
      for (const auto& c : r["hstar"]) h += (h.empty() ? "" : " ") + c.get<std::string>();
      body += r["word"].get<std::string>() + "," + std::to_string(r["n"].get<std::size_t>()) + "," +
              r["volume"].get<std::string>() + "," + h + "\n";
    }
  } else {
    body = j.dump(2) + "\n";
  }
  return write_output(out, body);
}

int cmd_export(const std::string& text, const std::string& what) {
  const SnakeWord w = read_word(text);
  if (what == "poset")
    std::cout << to_edge_list(build_poset(w));
  else if (what == "lattice")
    std::cout << to_coordinate_text(IdealLattice::build(w));
  else
    throw Error("unknown export target '" + what + "' (expected poset or lattice)");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snakelat: generalized snake posets, chain, h* and Ehrhart polynomials"};
  app.require_subcommand(1);

  std::string word, method = "auto", chain_method = "auto", suite = "all", out, what = "poset";
  bool verify_all = false;
  std::size_t max_length = 5;
  unsigned jobs = 1;

  auto* info = app.add_subcommand("info", "Summary of P(w) and J(P(w))");
  info->add_option("word", word, "Snake word, e.g. RRL or eRRL")->required();

  auto* hstar = app.add_subcommand("hstar", "h*-polynomial");
  hstar->add_option("word", word)->required();
  hstar->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "ascents", "red-turns", "recurrence", "chain", "closed"}));
  hstar->add_flag("--verify-all", verify_all, "Compute every applicable method and compare");

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial");
  ehr->add_option("word", word)->required();

  auto* chain = app.add_subcommand("chain", "Chain polynomial of J(P(w)) minus its minimum");
  chain->add_option("word", word)->required();
  chain->add_option("--method", chain_method)
      ->check(CLI::IsMember({"auto", "paths", "heights", "bruteforce", "all"}));

  auto* verify = app.add_subcommand("verify", "Run theorem and conjecture suites over canonical words");
  verify->add_option("--max-length", max_length)->check(CLI::NonNegativeNumber);
  verify->add_option("--suite", suite)->check(CLI::IsMember({"theorems", "conjectures", "all"}));
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "Report file (.json or .csv); stdout if omitted");

  auto* sweep = app.add_subcommand("sweep", "h* and volume for every canonical word");
  sweep->add_option("--max-length", max_length)->check(CLI::NonNegativeNumber);
  sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out, "Output file (.json or .csv); stdout if omitted");

  auto* exp = app.add_subcommand("export", "Cover relations of P(w) or coordinates of J(P(w)) as text");
  exp->add_option("word", word)->required();
  exp->add_option("--what", what)->check(CLI::IsMember({"poset", "lattice"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(word);
    if (*hstar) return cmd_hstar(word, method, verify_all);
    if (*ehr) return cmd_ehrhart(word);
    if (*chain) return cmd_chain(word, chain_method);
    if (*verify) return cmd_verify(max_length, suite, jobs, out);
    if (*sweep) return cmd_sweep(max_length, jobs, out);
    if (*exp) return cmd_export(word, what);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
