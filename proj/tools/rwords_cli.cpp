#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rwords/beta.hpp"
#include "rwords/errors.hpp"
#include "rwords/factor_table.hpp"
#include "rwords/report_json.hpp"
#include "rwords/return_words.hpp"
#include "rwords/rm_check.hpp"
#include "rwords/word_source.hpp"

namespace {

using namespace rwords;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= csv.size()) {
    std::size_t j = csv.find(',', i);
    if (j == std::string::npos) j = csv.size();
    std::string item = csv.substr(i, j - i);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParameterError(std::string(what) + ": bad integer '" + item + "'");
    }
    if (used != item.size())
      throw ParameterError(std::string(what) + ": bad integer '" + item + "'");
    out.push_back(v);
    i = j + 1;
    if (j == csv.size()) break;
  }
  if (out.empty()) throw ParameterError(std::string(what) + ": empty list");
  return out;
}

std::string join_csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

struct SourceOpts {
  std::string builtin, sub_file, sturmian_csv, periodic, preperiod;
  CLI::Option *o_builtin = nullptr, *o_sub_file = nullptr, *o_sturmian = nullptr,
              *o_periodic = nullptr, *o_preperiod = nullptr;

  WordSource make() const {
    int given = (o_builtin->count() ? 1 : 0) + (o_sub_file->count() ? 1 : 0) +
                (o_sturmian->count() ? 1 : 0) + (o_periodic->count() ? 1 : 0);
    if (given != 1)
      throw ParameterError(
          "give exactly one of --source, --sub-file, --sturmian, --periodic");
    if (o_preperiod->count() && !o_periodic->count())
      throw ParameterError("--preperiod requires --periodic");
    if (o_builtin->count()) return builtin_source(builtin);
    if (o_sub_file->count()) {
      WordSource src = WordSource::fixed_point(load_substitution_file(sub_file));
      src.rename(sub_file);
      return src;
    }
    if (o_sturmian->count())
      return WordSource::sturmian(parse_int_list(sturmian_csv, "--sturmian"));
    return WordSource::eventually_periodic(preperiod, periodic);
  }
};

std::string quote_word(std::string_view w) { return "\"" + std::string(w) + "\""; }

void print_saturation(std::ostream& os, const SaturationCertificate& c) {
  os << "certified: factor lengths <= " << c.max_len_certified << ", windows " << c.window
     << "/" << c.doubled_window;
  if (c.iterations)
    os << ", iterates " << c.iterations->first << "/" << c.iterations->second;
  os << "\n";
}

int cmd_gen(const WordSource& src, std::size_t len, bool json) {
  if (json)
    std::cout << render_json(gen_report(src, len));
  else
    std::cout << src.head(len) << "\n";
  return 0;
}

int cmd_analyze(const WordSource& src, std::size_t max_len, bool json) {
  FactorTable t = FactorTable::build(src, max_len);
  if (json) {
    std::cout << render_json(analyze_report(t));
    return 0;
  }
  std::cout << "source: " << t.source_name() << "\n";
  std::cout << "alphabet: " << t.alphabet().letters() << "\n";
  print_saturation(std::cout, t.certificate());
  for (std::size_t n = 0; n <= t.max_len(); ++n) {
    std::cout << "n=" << n << " C=" << t.complexity(n) << " dC=" << t.delta_complexity(n)
              << "\n";
    for (const BilateralReport& r : t.special_factors(n)) {
      std::cout << "  " << quote_word(r.factor) << ": class=" << to_string(r.cls)
                << " B=" << r.bilateral_order << " left=" << quote_word(r.left_extensions)
                << " right=" << quote_word(r.right_extensions) << " pairs=[";
      for (std::size_t i = 0; i < r.extension_pairs.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << r.extension_pairs[i];
      }
      std::cout << "]";
      if (r.maximal_left_special) std::cout << " maximal-left";
      if (r.maximal_right_special) std::cout << " maximal-right";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_returns(const WordSource& src, const std::string& factor, const std::string& dot_path,
                bool json) {
  ReturnSet rs = return_set(src, factor);
  ReturnTrie trie = build_return_trie(src, factor);
  const Alphabet& a = src.alphabet();

  auto sorted = [&](std::vector<Word> ws) {
    a.sort_words(ws);
    return ws;
  };
  std::vector<Word> rets = sorted(rs.returns);
  std::vector<Word> comps = sorted(rs.complete_returns);
  std::vector<Word> internals = sorted(trie.internal_labels());
  std::vector<Word> leaves = sorted(trie.leaf_labels());

  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw Error("cannot write DOT file: " + dot_path);
    out << to_dot(trie);
  }

  if (json) {
    std::cout << render_json(returns_report(src.name(), a, rs, trie));
    return 0;
  }
  auto print_list = [](const std::vector<Word>& ws) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << ws[i];
    }
    std::cout << "\n";
  };
  std::cout << "factor " << quote_word(factor) << " of " << src.name() << "\n";
  std::cout << "returns (" << rets.size() << "): ";
  print_list(rets);
  std::cout << "complete (" << comps.size() << "): ";
  print_list(comps);
  std::cout << "eventually periodic: " << (rs.eventually_periodic ? "yes" : "no") << "\n";
  std::cout << "certificate: window=" << rs.cert.window
            << " doubled=" << rs.cert.doubled_window
            << " occurrences=" << rs.cert.occurrences_used << "\n";
  std::cout << "trie: " << trie.nodes.size() << " nodes, " << trie.leaf_count()
            << " leaves, identity " << (trie.leaf_identity() ? "ok" : "VIOLATED") << "\n";
  std::cout << "internal: ";
  print_list(internals);
  std::cout << "leaves: ";
  print_list(leaves);
  if (!dot_path.empty()) std::cout << "dot written: " << dot_path << "\n";
  return 0;
}

int cmd_check_rm(const WordSource& src, int m, std::size_t max_len,
                 const std::string& method_name, bool json) {
  RmMethod method =
      method_name == "full" ? RmMethod::FullScan : RmMethod::BispecialReduction;
  RmVerdict v = check_rm(src, m, max_len, method);
  if (json) {
    std::cout << render_json(check_rm_report(src.name(), v));
  } else {
    std::cout << "source: " << src.name() << "\n";
    std::cout << "m=" << v.m << " max-len=" << v.max_length
              << " method=" << to_string(v.method) << "\n";
    std::cout << "holds: " << (v.holds ? "yes" : "no") << "\n";
    if (v.witness)
      std::cout << "witness: factor " << quote_word(v.witness->factor) << " has "
                << v.witness->return_count << " return words (expected " << v.m << ")\n";
    if (v.eventually_periodic) std::cout << "eventually periodic: yes\n";
  }
  return v.holds ? 0 : 1;
}

int cmd_beta(const std::string& coeffs_csv, bool do_check_rm, std::size_t gaps_n,
             std::size_t max_len, bool json) {
  std::vector<int> t = parse_int_list(coeffs_csv, "--coeffs");
  BetaSpec spec = make_beta_spec(t);
  Substitution sub = build_beta_substitution(t);

  std::optional<RmVerdict> rm;
  if (do_check_rm) {
    WordSource src = WordSource::fixed_point(sub);
    src.rename("beta(" + join_csv(t) + ")");
    rm = check_rm(src, static_cast<int>(t.size()), max_len);
  }

  std::optional<BetaIntegerList> gaps;
  std::optional<bool> match;
  if (gaps_n > 0) {
    gaps = beta_integers(t, gaps_n);
    match = gaps->gap_word == fixed_point_prefix(sub, gaps->gap_word.size());
  }

  if (json) {
    std::cout << render_json(beta_report(spec, sub, rm, gaps, match));
  } else {
    std::cout << "coeffs: " << join_csv(t) << "\n";
    std::cout << "beta: " << fmt_double(spec.beta) << "\n";
    std::cout << "residual: " << fmt_double(spec.residual) << "\n";
    std::cout << "parry simple: " << (spec.parry_simple ? "yes" : "no") << "\n";
    std::cout << "rm conditions: " << (spec.rm_conditions ? "yes" : "no") << "\n";
    std::cout << "arnoux-rauzy: " << (spec.arnoux_rauzy ? "yes" : "no") << "\n";
    std::cout << "substitution over \"" << sub.alphabet().letters() << "\", seed "
              << sub.seed() << ":";
    for (char c : sub.alphabet().letters()) std::cout << " " << c << "->" << sub.image(c);
    std::cout << "\n";
    if (rm)
      std::cout << "check-rm: m=" << rm->m << " max-len=" << rm->max_length << " -> "
                << (rm->holds ? "holds" : "fails") << "\n";
    if (gaps) {
      std::cout << "beta-integers (" << gaps->items.size() << "):\n";
      for (const BetaInteger& b : gaps->items)
        std::cout << "  " << digits_to_string(b.digits) << " = " << fmt_double(b.value)
                  << "\n";
      std::cout << "distances:";
      for (std::size_t k = 0; k < gaps->distances.size(); ++k)
        std::cout << " " << k << "=" << fmt_double(gaps->distances[k]);
      std::cout << "\n";
      std::cout << "gap word: " << gaps->gap_word << "\n";
      std::cout << "matches fixed point: " << (*match ? "yes" : "no") << "\n";
    }
  }
  if (rm && !rm->holds) return 1;
  if (match && !*match) return 1;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Prefixes, factor statistics, return words, and the R_m property of "
      "substitution fixed points, Sturmian words, and beta-numeration words."};
  app.require_subcommand(1);

  bool json = false;
  std::size_t max_len = 12;
  SourceOpts so;
  app.add_flag("--json", json, "machine-readable report with schema field");
  so.o_builtin = app.add_option("--source", so.builtin,
                                "builtin source: fibonacci, tribonacci, thue_morse, "
                                "chacon_recoded, r4_example");
  so.o_sub_file = app.add_option("--sub-file", so.sub_file, "substitution description file");
  so.o_sturmian =
      app.add_option("--sturmian", so.sturmian_csv, "Sturmian directives d1,d2,...");
  so.o_periodic =
      app.add_option("--periodic", so.periodic, "period of an eventually periodic word");
  so.o_preperiod = app.add_option("--preperiod", so.preperiod, "preperiod for --periodic");
  app.add_option("--max-len", max_len, "factor length bound (default 12)");

  auto* gen = app.add_subcommand("gen", "print a prefix of the word");
  std::size_t gen_len = 64;
  gen->add_option("--len", gen_len, "number of letters (default 64)");
  gen->fallthrough();

  auto* analyze =
      app.add_subcommand("analyze", "complexity, special factors, bilateral orders");
  analyze->fallthrough();

  auto* returns = app.add_subcommand("returns", "return words and return trie of a factor");
  std::string factor, dot_path;
  returns->add_option("--factor", factor, "the factor (may be empty)")->required();
  returns->add_option("--dot", dot_path, "write the return trie in DOT format");
  returns->fallthrough();

  auto* check = app.add_subcommand("check-rm", "does every factor have exactly m returns");
  int m = 0;
  std::string method = "bispecial";
  check->add_option("--m", m, "expected number of return words")->required();
  check->add_option("--method", method, "full | bispecial (default bispecial)")
      ->check(CLI::IsMember({"full", "bispecial"}));
  check->fallthrough();

  auto* beta = app.add_subcommand("beta", "beta-numeration: root, conditions, beta-integers");
  std::string coeffs;
  bool beta_check_rm = false;
  std::size_t gaps_n = 0;
  beta->add_option("--coeffs", coeffs, "t1,t2,...,tm (most significant first)")->required();
  beta->add_flag("--check-rm", beta_check_rm, "run the empirical R_m check on the fixed point");
  beta->add_option("--gaps", gaps_n, "enumerate N beta-integers and code the gaps");
  beta->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(so.make(), gen_len, json);
    if (analyze->parsed()) return cmd_analyze(so.make(), max_len, json);
    if (returns->parsed()) return cmd_returns(so.make(), factor, dot_path, json);
    if (check->parsed()) return cmd_check_rm(so.make(), m, max_len, method, json);
    if (beta->parsed()) return cmd_beta(coeffs, beta_check_rm, gaps_n, max_len, json);
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 3;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
