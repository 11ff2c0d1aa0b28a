#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rwords/beta.hpp"
#include "rwords/factor_table.hpp"
#include "rwords/return_words.hpp"
#include "rwords/rm_check.hpp"

namespace rwords {

// All reports share a top-level {"schema": 1, "command": ...} envelope and
// insertion-ordered keys, so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const SaturationCertificate& c);
Json to_json(const StabilizationCertificate& c);
Json to_json(const BilateralReport& r);
Json to_json(const RmVerdict& v);

Json gen_report(const WordSource& src, std::size_t len);
Json analyze_report(const FactorTable& t);
Json returns_report(std::string_view source, const Alphabet& a, const ReturnSet& rs,
                    const ReturnTrie& trie);
Json check_rm_report(std::string_view source, const RmVerdict& v);
Json beta_report(const BetaSpec& spec, const Substitution& sub,
                 const std::optional<RmVerdict>& rm,
                 const std::optional<BetaIntegerList>& gaps,
                 std::optional<bool> gaps_match);

// dump(2) with a trailing newline.
std::string render_json(const Json& j);

}  // namespace rwords
