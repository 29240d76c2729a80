#include "rsf/json_io.hpp"

#include "json.hpp"

#include <exception>

namespace rsf {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string hecke_element_to_json_text(const HeckeElement<Rational>& e, int indent) {
  json obj = json::object();
  const SymmetricGroup& g = e.algebra()->group();
  for (const auto& [idx, c] : e.terms()) obj[g.name(idx)] = to_text(c);
  return dump(obj, indent);
}

std::optional<HeckeElement<Rational>> hecke_element_from_json_text(const HeckeAlgebra& alg,
                                                                   std::string_view text) {
  json obj = json::parse(text, nullptr, false);
  if (!obj.is_object()) return std::nullopt;
  HeckeElement<Rational> out(&alg);
  const SymmetricGroup& g = alg.group();
  for (const auto& [key, value] : obj.items()) {
    std::uint32_t idx = g.index_of_name(key);
    if (idx == g.order() || !value.is_string()) return std::nullopt;
    std::optional<Rational> c = parse_rational(value.get<std::string>());
    if (!c) return std::nullopt;
    out.add_term(idx, *c);
  }
  return out;
}

std::string weight_text(const GlWeight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::optional<GlWeight> weight_from_text(std::string_view text) {
  GlWeight out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (piece.empty()) return std::nullopt;
    int value = 0;
    for (char ch : piece) {
      if (ch < '0' || ch > '9') return std::nullopt;
      value = value * 10 + (ch - '0');
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

json check_report_to_json(const CheckReport& report) {
  json items = json::array();
  for (const CheckItem& item : report.items)
    items.push_back(json{{"name", item.name}, {"pass", item.pass}});
  return json{{"all_pass", report.all_pass()}, {"items", items}};
}

std::optional<CheckReport> check_report_from_json(const json& obj) {
  if (!obj.is_object() || !obj.contains("items") || !obj["items"].is_array()) return std::nullopt;
  CheckReport out;
  for (const json& item : obj["items"]) {
    if (!item.is_object() || !item.contains("name") || !item.contains("pass") ||
        !item["name"].is_string() || !item["pass"].is_boolean())
      return std::nullopt;
    out.add(item["name"].get<std::string>(), item["pass"].get<bool>());
  }
  return out;
}

json module_report_to_json(const ModuleReport& report) {
  json mults = json::object();
  for (const auto& [weight, mult] : report.weight_multiplicities)
    mults[weight_text(weight)] = mult;
  json eigs = json::array();
  for (const auto& [a, b] : report.hw_eigenvalues) eigs.push_back(json::array({to_text(a), to_text(b)}));
  return json{{"lambda", report.lambda.to_text()},
              {"tableau", report.tableau.to_text()},
              {"rank", report.rank},
              {"predicted_dim", report.predicted_dim},
              {"weight_multiplicities", mults},
              {"highest_weight", weight_text(report.highest_weight)},
              {"hw_eigenvalues", eigs},
              {"flags",
               json{{"rank_matches_prediction", report.flags.rank_matches_prediction},
                    {"weights_match_kostka", report.flags.weights_match_kostka},
                    {"unique_highest_weight", report.flags.unique_highest_weight},
                    {"highest_weight_matches_shape", report.flags.highest_weight_matches_shape},
                    {"eigenvalues_match", report.flags.eigenvalues_match},
                    {"commutes_with_action", report.flags.commutes_with_action},
                    {"all_pass", report.flags.all_pass()}}}};
}

std::optional<ModuleReport> module_report_from_json(const json& obj) {
  if (!obj.is_object()) return std::nullopt;
  try {
    std::optional<Partition> lambda = Partition::parse(obj.at("lambda").get<std::string>());
    std::optional<StandardTableau> tableau =
        StandardTableau::parse(obj.at("tableau").get<std::string>());
    std::optional<GlWeight> hw = weight_from_text(obj.at("highest_weight").get<std::string>());
    if (!lambda || !tableau || !hw) return std::nullopt;

    std::map<GlWeight, long> mults;
    for (const auto& [key, value] : obj.at("weight_multiplicities").items()) {
      std::optional<GlWeight> w = weight_from_text(key);
      if (!w) return std::nullopt;
      mults[*w] = value.get<long>();
    }

    std::vector<std::pair<Rational, Rational>> eigs;
    for (const json& pair : obj.at("hw_eigenvalues")) {
      std::optional<Rational> a = parse_rational(pair.at(0).get<std::string>());
      std::optional<Rational> b = parse_rational(pair.at(1).get<std::string>());
      if (!a || !b) return std::nullopt;
      eigs.emplace_back(*a, *b);
    }

    const json& fl = obj.at("flags");
    ModuleFlags flags;
    flags.rank_matches_prediction = fl.at("rank_matches_prediction").get<bool>();
    flags.weights_match_kostka = fl.at("weights_match_kostka").get<bool>();
    flags.unique_highest_weight = fl.at("unique_highest_weight").get<bool>();
    flags.highest_weight_matches_shape = fl.at("highest_weight_matches_shape").get<bool>();
    flags.eigenvalues_match = fl.at("eigenvalues_match").get<bool>();
    flags.commutes_with_action = fl.at("commutes_with_action").get<bool>();

    return ModuleReport{*lambda,
                        *tableau,
                        obj.at("rank").get<long>(),
                        obj.at("predicted_dim").get<long long>(),
                        std::move(mults),
                        *hw,
                        std::move(eigs),
                        flags};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::string check_report_to_json_text(const CheckReport& report, int indent) {
  return dump(check_report_to_json(report), indent);
}

std::optional<CheckReport> check_report_from_json_text(std::string_view text) {
  json obj = json::parse(text, nullptr, false);
  if (obj.is_discarded()) return std::nullopt;
  return check_report_from_json(obj);
}

std::string module_report_to_json_text(const ModuleReport& report, int indent) {
  return dump(module_report_to_json(report), indent);
}

std::optional<ModuleReport> module_report_from_json_text(std::string_view text) {
  json obj = json::parse(text, nullptr, false);
  if (obj.is_discarded()) return std::nullopt;
  return module_report_from_json(obj);
}

std::string audit_report_to_json_text(const AuditReport& report, int indent) {
  json modules = json::array();
  for (const ModuleReport& m : report.modules) modules.push_back(module_report_to_json(m));
  json obj{{"n", report.n},
           {"m", report.m},
           {"checks", check_report_to_json(report.checks)},
           {"modules", modules},
           {"all_pass", report.all_pass()}};
  return dump(obj, indent);
}

std::optional<AuditReport> audit_report_from_json_text(std::string_view text) {
  json obj = json::parse(text, nullptr, false);
  if (!obj.is_object() || !obj.contains("n") || !obj.contains("m") || !obj.contains("checks") ||
      !obj.contains("modules") || !obj["modules"].is_array())
    return std::nullopt;
  AuditReport out;
  try {
    out.n = obj["n"].get<int>();
    out.m = obj["m"].get<int>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::optional<CheckReport> checks = check_report_from_json(obj["checks"]);
  if (!checks) return std::nullopt;
  out.checks = std::move(*checks);
  for (const json& m : obj["modules"]) {
    std::optional<ModuleReport> report = module_report_from_json(m);
    if (!report) return std::nullopt;
    out.modules.push_back(std::move(*report));
  }
  return out;
}

std::string fusion_comparisons_to_json_text(const std::vector<FusionComparison>& list,
                                            int indent) {
  json arr = json::array();
  for (const FusionComparison& c : list) {
    arr.push_back(json{{"lambda", c.lambda.to_text()},
                       {"tableau", c.tableau.to_text()},
                       {"equal", c.equal},
                       {"millis", c.millis}});
  }
  return dump(arr, indent);
}

std::optional<std::vector<FusionComparison>> fusion_comparisons_from_json_text(
    std::string_view text) {
  json arr = json::parse(text, nullptr, false);
  if (!arr.is_array()) return std::nullopt;
  std::vector<FusionComparison> out;
  for (const json& item : arr) {
    try {
      std::optional<Partition> lambda = Partition::parse(item.at("lambda").get<std::string>());
      std::optional<StandardTableau> tableau =
          StandardTableau::parse(item.at("tableau").get<std::string>());
      if (!lambda || !tableau) return std::nullopt;
      out.push_back(FusionComparison{*lambda, *tableau, item.at("equal").get<bool>(),
                                     item.at("millis").get<double>()});
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace rsf
