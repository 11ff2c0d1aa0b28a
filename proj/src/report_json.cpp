#include "rwords/report_json.hpp"

namespace rwords {

Json to_json(const SaturationCertificate& c) {
  Json j;
  j["max_len_certified"] = c.max_len_certified;
  j["window"] = c.window;
  j["doubled_window"] = c.doubled_window;
  if (c.iterations) {
    j["iterations"] = Json::array({c.iterations->first, c.iterations->second});
  }
  return j;
}

Json to_json(const StabilizationCertificate& c) {
  Json j;
  j["window"] = c.window;
  j["doubled_window"] = c.doubled_window;
  j["occurrences_used"] = c.occurrences_used;
  return j;
}

Json to_json(const BilateralReport& r) {
  Json j;
  j["factor"] = r.factor;
  j["left_extensions"] = r.left_extensions;
  j["right_extensions"] = r.right_extensions;
  j["extension_pairs"] = r.extension_pairs;
  j["bilateral_order"] = r.bilateral_order;
  j["class"] = std::string(to_string(r.cls));
  j["maximal_left_special"] = r.maximal_left_special;
  j["maximal_right_special"] = r.maximal_right_special;
  return j;
}

Json to_json(const RmVerdict& v) {
  Json j;
  j["m"] = v.m;
  j["max_length"] = v.max_length;
  j["method"] = std::string(to_string(v.method));
  j["holds"] = v.holds;
  j["eventually_periodic"] = v.eventually_periodic;
  if (v.witness) {
    Json w;
    w["factor"] = v.witness->factor;
    w["return_count"] = v.witness->return_count;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  Json per = Json::array();
  for (const RmLengthSummary& s : v.per_length) {
    Json row;
    row["length"] = s.length;
    Json bis;
    for (const auto& [factor, count] : s.bispecial_counts) bis[factor] = count;
    row["bispecial_return_counts"] = std::move(bis);
    per.push_back(std::move(row));
  }
  j["per_length"] = std::move(per);
  return j;
}

Json gen_report(const WordSource& src, std::size_t len) {
  Json j;
  j["schema"] = 1;
  j["command"] = "gen";
  j["source"] = src.name();
  j["length"] = len;
  j["prefix"] = src.head(len);
  return j;
}

Json analyze_report(const FactorTable& t) {
  Json j;
  j["schema"] = 1;
  j["command"] = "analyze";
  j["source"] = t.source_name();
  j["alphabet"] = std::string(t.alphabet().letters());
  j["max_length"] = t.max_len();
  j["certificate"] = to_json(t.certificate());
  Json lengths = Json::array();
  for (std::size_t n = 0; n <= t.max_len(); ++n) {
    Json row;
    row["length"] = n;
    row["complexity"] = t.complexity(n);
    row["delta_complexity"] = t.delta_complexity(n);
    Json specials = Json::array();
    for (const BilateralReport& r : t.special_factors(n)) specials.push_back(to_json(r));
    row["special_factors"] = std::move(specials);
    lengths.push_back(std::move(row));
  }
  j["lengths"] = std::move(lengths);
  return j;
}

Json returns_report(std::string_view source, const Alphabet& a, const ReturnSet& rs,
                    const ReturnTrie& trie) {
  auto sorted = [&](std::vector<Word> ws) {
    a.sort_words(ws);
    return ws;
  };
  Json j;
  j["schema"] = 1;
  j["command"] = "returns";
  j["source"] = std::string(source);
  j["factor"] = rs.factor;
  j["returns"] = sorted(rs.returns);
  j["complete_returns"] = sorted(rs.complete_returns);
  j["count"] = rs.returns.size();
  j["eventually_periodic"] = rs.eventually_periodic;
  j["certificate"] = to_json(rs.cert);
  Json tj;
  tj["node_count"] = trie.nodes.size();
  tj["leaf_count"] = trie.leaf_count();
  tj["internal"] = sorted(trie.internal_labels());
  tj["leaves"] = sorted(trie.leaf_labels());
  tj["leaf_identity_ok"] = trie.leaf_identity();
  j["trie"] = std::move(tj);
  return j;
}

Json check_rm_report(std::string_view source, const RmVerdict& v) {
  Json j;
  j["schema"] = 1;
  j["command"] = "check-rm";
  j["source"] = std::string(source);
  Json body = to_json(v);
  j.update(body);
  return j;
}

Json beta_report(const BetaSpec& spec, const Substitution& sub,
                 const std::optional<RmVerdict>& rm,
                 const std::optional<BetaIntegerList>& gaps,
                 std::optional<bool> gaps_match) {
  Json j;
  j["schema"] = 1;
  j["command"] = "beta";
  j["coeffs"] = spec.coeffs;
  j["beta"] = spec.beta;
  j["residual"] = spec.residual;
  j["parry_simple"] = spec.parry_simple;
  j["rm_conditions"] = spec.rm_conditions;
  j["arnoux_rauzy"] = spec.arnoux_rauzy;
  Json sj;
  sj["alphabet"] = std::string(sub.alphabet().letters());
  Json images;
  for (char c : sub.alphabet().letters()) images[std::string(1, c)] = sub.image(c);
  sj["images"] = std::move(images);
  sj["seed"] = std::string(1, sub.seed());
  j["substitution"] = std::move(sj);
  if (rm) j["check_rm"] = to_json(*rm);
  if (gaps) {
    Json g;
    g["count"] = gaps->items.size();
    Json items = Json::array();
    for (const BetaInteger& b : gaps->items) {
      Json it;
      it["digits"] = digits_to_string(b.digits);
      it["value"] = b.value;
      items.push_back(std::move(it));
    }
    g["items"] = std::move(items);
    g["distances"] = gaps->distances;
    g["gap_word"] = gaps->gap_word;
    if (gaps_match) g["matches_fixed_point"] = *gaps_match;
    j["gaps"] = std::move(g);
  }
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rwords
