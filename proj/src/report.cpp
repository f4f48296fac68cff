#include "snakelat/report.hpp"

#include "snakelat/chain_poly.hpp"
#include "snakelat/conjectures.hpp"
#include "snakelat/ehrhart.hpp"
#include "snakelat/hstar.hpp"
#include "snakelat/ideal_lattice.hpp"

#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace snakelat {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HeuristicPass: return "heuristic-pass";
    case CheckStatus::NoConverge: return "no-converge";
    case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Theorems: return "theorems";
    case Suite::Conjectures: return "conjectures";
    case Suite::All: return "all";
  }
  return "all";
}

Suite parse_suite(const std::string& s) {
  if (s == "theorems") return Suite::Theorems;
  if (s == "conjectures") return Suite::Conjectures;
  if (s == "all") return Suite::All;
  throw Error("unknown suite '" + s + "' (expected theorems, conjectures or all)");
}

namespace {

// Size guards for the enumerative cross-checks.
constexpr std::size_t kEnumerateMaxN = 8;
constexpr std::size_t kChainMaxN = 10;
constexpr std::size_t kExtensionCountMaxN = 12;
constexpr unsigned kOracleMaxT = 4;

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string poly_text(const IntPolynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + "]";
}

}  // namespace

std::vector<CheckRecord> theorem_checks(const SnakeWord& w) {
  std::vector<CheckRecord> out;
  const std::string word = w.str();
  const std::size_t n = w.length();
  auto add = [&](std::string check, bool ok, std::string detail) {
    out.push_back({word, std::move(check), status_of(ok), std::move(detail), false});
  };
  auto guarded = [&](const std::string& check, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(check, false, std::string("exception: ") + e.what());
    }
  };

  const IntPolynomial h = hstar_recurrence(w);

  guarded("hstar_methods_agree", [&] {
    std::string used = "recurrence";
    bool ok = true;
    auto compare = [&](const std::string& name, const IntPolynomial& other) {
      used += "," + name;
      if (other != h) {
        ok = false;
        used += "(" + poly_text(other) + ")";
      }
    };
    if (w.is_ladder()) compare("ladder_closed", hstar_ladder_closed(n));
    if (w.is_snake()) compare("snake_closed", hstar_snake_closed(n));
    if (auto sub = hstar_recurrence_subsnake(w)) compare("subsnake_recurrence", *sub);
    if (n <= kChainMaxN) compare("chain_transform", hstar_chain_transform(w));
    if (n <= kEnumerateMaxN) {
      compare("ascents", hstar_enumerate(w, EnumerateVia::Ascents));
      compare("red_turns", hstar_enumerate(w, EnumerateVia::RedTurns));
    }
    add("hstar_methods_agree", ok, "h*=" + poly_text(h) + " methods=" + used);
  });

  guarded("hstar_shape", [&] {
    bool nonneg = true;
    for (const auto& c : h.coefficients()) nonneg = nonneg && c >= 0;
    const bool ok = nonneg && h[0] == 1 && h.degree() == static_cast<int>(n + 1) && is_palindromic(h);
    add("hstar_shape", ok, "degree=" + std::to_string(h.degree()) + " palindromic=" + (is_palindromic(h) ? "yes" : "no"));
  });

  const BigInt volume = h.evaluate(BigInt(1));
  guarded("volume", [&] {
    const BigInt rec = volume_recurrence(w);
    bool ok = rec == volume;
    std::string detail = "h*(1)=" + to_string(volume) + " recurrence=" + to_string(rec);
    const IdealLattice j = IdealLattice::build(w);
    const BigInt chains = count_maximal_chains(j);
    ok = ok && chains == volume;
    detail += " maximal_chains=" + to_string(chains);
    if (n <= kExtensionCountMaxN) {
      const BigInt ext = count_linear_extensions(j.poset());
      ok = ok && ext == volume;
      detail += " linear_extensions=" + to_string(ext);
    }
    add("volume", ok, detail);
  });

  guarded("volume_bounds", [&] {
    const BigInt lo = hstar_snake_closed(n).evaluate(BigInt(1));
    const BigInt hi = catalan(static_cast<unsigned>(n + 2));
    add("volume_bounds", lo <= volume && volume <= hi,
        to_string(lo) + "<=" + to_string(volume) + "<=" + to_string(hi));
  });

  guarded("hstar_sandwich", [&] {
    const bool ok = coefficientwise_leq(hstar_snake_closed(n), h) && coefficientwise_leq(h, hstar_ladder_closed(n));
    add("hstar_sandwich", ok, "snake<=h*<=ladder coefficientwise");
  });

  const IdealLattice lattice = IdealLattice::build(w);
  guarded("lattice_size", [&] {
    const std::size_t rec = lattice_size_recursive(w);
    add("lattice_size", rec == lattice.size(),
        "|J|=" + std::to_string(lattice.size()) + " recursive=" + std::to_string(rec));
  });

  if (n <= kChainMaxN) {
    guarded("chain_methods_agree", [&] {
      const IntPolynomial brute = chain_polynomial_bruteforce(lattice);
      const IntPolynomial heights = chain_polynomial_heights(lattice);
      const IntPolynomial paths = valid_path_weight(lattice);
      const bool ok = brute == heights && brute == paths &&
                      brute.degree() == static_cast<int>(2 * n + 4) && brute.leading() == volume &&
                      chain_to_hstar(brute, static_cast<int>(2 * n + 4)) == h;
      add("chain_methods_agree", ok, "C=" + poly_text(brute));
    });
  }

  const EhrhartRecord er = ehrhart_polynomial(w);
  guarded("ehrhart_oracle", [&] {
    bool ok = er.L[0] == 1;
    std::string detail;
    for (unsigned t = 0; t <= kOracleMaxT; ++t) {
      const BigInt direct = lattice_point_oracle(w, t);
      ok = ok && er.L.evaluate(Rational(t)) == Rational(direct);
      detail += (t ? "," : "L(0..4)=") + to_string(direct);
    }
    ok = ok && er.L.leading() * Rational(factorial(static_cast<unsigned>(er.dimension))) == Rational(volume);
    add("ehrhart_oracle", ok, detail);
  });

  guarded("roots_theorem", [&] {
    const RootsReport rr = check_roots_theorem(w, er.L);
    std::string roots;
    for (const auto& r : rr.integer_roots) roots += (roots.empty() ? "" : ",") + to_string(r);
    add("roots_theorem", rr.passed(),
        std::string("divisible=") + (rr.divisible ? "yes" : "no") + " symmetric=" + (rr.symmetric ? "yes" : "no") +
            " integer_roots={" + roots + "} bound=" + to_string(rr.search_bound));
  });

  guarded("gorenstein", [&] {
    const GorensteinCheck g = gorenstein_index(w, er.L);
    add("gorenstein", g.verified, "index=" + std::to_string(g.index));
  });

  if (w.is_ladder()) {
    guarded("ladder_ehrhart_closed", [&] {
      bool ok = ladder_ehrhart_closed(n) == er.L;
      for (unsigned t = 0; t <= kOracleMaxT; ++t)
        ok = ok && macmahon_box(2, static_cast<unsigned>(n + 2), t) == lattice_point_oracle(w, t);
      add("ladder_ehrhart_closed", ok, "closed product and MacMahon box counts");
    });
  }

  if (n >= 1) {
    guarded("swap_monotonicity", [&] {
      bool ok = true;
      std::string detail;
      for (const auto& c : check_swap_monotonicity(w)) {
        ok = ok && c.passed();
        detail += (detail.empty() ? "" : ";") + std::to_string(c.index) + ":" +
                  (c.equal ? "equal" : (c.strict ? "strict" : "violated"));
      }
      add("swap_monotonicity", ok, detail);
    });
  }
  return out;
}

std::vector<CheckRecord> conjecture_checks(const SnakeWord& w) {
  std::vector<CheckRecord> out;
  const std::string word = w.str();
  auto add = [&](std::string check, CheckStatus s, std::string detail) {
    out.push_back({word, std::move(check), s, std::move(detail), true});
  };
  try {
    const RealRootedResult rr = check_real_rooted(w);
    add("hstar_real_negative_roots", status_of(rr.real_rooted && rr.negative),
        "degree=" + std::to_string(rr.degree) + " distinct_real=" + std::to_string(rr.distinct_real_roots) +
            " real_with_multiplicity=" + std::to_string(rr.real_roots_with_multiplicity) +
            " negative=" + (rr.negative ? "yes" : "no"));
  } catch (const std::exception& e) {
    add("hstar_real_negative_roots", CheckStatus::Fail, std::string("exception: ") + e.what());
  }
  try {
    const PositivityResult p = check_ehrhart_positivity(w);
    add("ehrhart_positive", status_of(p.positive),
        p.positive ? "all coefficients nonnegative"
                   : "negative coefficient at t^" + std::to_string(*p.first_negative_coefficient));
  } catch (const std::exception& e) {
    add("ehrhart_positive", CheckStatus::Fail, std::string("exception: ") + e.what());
  }
  try {
    const DiskResult d = check_root_disk(w);
    std::ostringstream os;
    os << std::setprecision(6) << "HEURISTIC centre=" << static_cast<double>(d.center)
       << " radius=" << static_cast<double>(d.radius)
       << " max_violation=" << static_cast<double>(d.max_violation)
       << " alt(l-1) in_disk=" << (d.alt_all_in_disk ? "yes" : "no")
       << " alt_max_violation=" << static_cast<double>(d.alt_max_violation);
    CheckStatus s = CheckStatus::Fail;
    if (!d.converged)
      s = CheckStatus::NoConverge;
    else if (d.all_in_disk && d.symmetric)
      s = CheckStatus::HeuristicPass;
    add("ehrhart_root_disk", s, os.str());
  } catch (const std::exception& e) {
    add("ehrhart_root_disk", CheckStatus::Fail, std::string("exception: ") + e.what());
  }
  if (w.length() >= 1) {
    try {
      bool ok = true;
      std::string detail;
      for (const auto& c : check_ehrhart_swap_monotonicity(w)) {
        const bool good = c.holds && (c.index != 1 || c.equal);
        ok = ok && good;
        detail += (detail.empty() ? "" : ";") + std::to_string(c.index) + ":" +
                  (c.equal ? "equal" : (c.holds ? "holds" : "violated"));
      }
      add("ehrhart_swap_monotonicity", status_of(ok), detail);
    } catch (const std::exception& e) {
      add("ehrhart_swap_monotonicity", CheckStatus::Fail, std::string("exception: ") + e.what());
    }
  }
  return out;
}

std::size_t Report::theorem_failures() const {
  std::size_t k = 0;
  for (const auto& r : records)
    if (!r.conjecture && r.status == CheckStatus::Fail) ++k;
  return k;
}

std::size_t Report::conjecture_failures() const {
  std::size_t k = 0;
  for (const auto& r : records)
    if (r.conjecture && (r.status == CheckStatus::Fail || r.status == CheckStatus::NoConverge)) ++k;
  return k;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mu;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<SnakeWord> canonical_words_up_to(std::size_t max_length) {
  std::vector<SnakeWord> words;
  for (std::size_t n = 0; n <= max_length; ++n)
    for (auto& w : enumerate_words(n, true)) words.push_back(std::move(w));
  return words;
}

Report run_verification(const VerifyOptions& opts) {
  Report rep;
  rep.max_length = opts.max_length;
  rep.suite = opts.suite;
  const auto words = canonical_words_up_to(opts.max_length);
  rep.word_count = words.size();
  std::vector<std::vector<CheckRecord>> slots(words.size());
  parallel_for(words.size(), opts.jobs, [&](std::size_t i) {
    auto& slot = slots[i];
    if (opts.suite != Suite::Conjectures)
      for (auto& r : theorem_checks(words[i])) slot.push_back(std::move(r));
    if (opts.suite != Suite::Theorems)
      for (auto& r : conjecture_checks(words[i])) slot.push_back(std::move(r));
  });
  for (auto& s : slots)
    for (auto& r : s) rep.records.push_back(std::move(r));
  return rep;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = "snakelat/1";
  j["command"] = "verify";
  j["max_length"] = r.max_length;
  j["suite"] = to_string(r.suite);
  j["words"] = r.word_count;
  j["theorem_failures"] = r.theorem_failures();
  j["conjecture_failures"] = r.conjecture_failures();
  auto theorems = nlohmann::ordered_json::array();
  auto conjectures = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json e;
    e["word"] = rec.word;
    e[rec.conjecture ? "conjecture" : "check"] = rec.check;
    e["status"] = to_string(rec.status);
    e["details"] = rec.detail;
    (rec.conjecture ? conjectures : theorems).push_back(std::move(e));
  }
  j["theorems"] = std::move(theorems);
  j["conjectures"] = std::move(conjectures);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::string out = "word,check,status,detail\n";
  for (const auto& rec : r.records)
    out += csv_field(rec.word) + "," + csv_field(rec.check) + "," + to_string(rec.status) + "," +
           csv_field(rec.detail) + "\n";
  return out;
}

}  // namespace snakelat
