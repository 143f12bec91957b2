#include "npc/proof_json.hpp"

#include <json.hpp>

#include "npc/parse.hpp"

namespace npc {

namespace {

using nlohmann::json;

json perm_to_json(const Perm& p) { return json(p.image()); }

Perm perm_from_json(const json& j) {
  if (!j.is_array()) throw proof_format_error("decoration must be an array");
  std::vector<int> image;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw proof_format_error("decoration entries must be integers");
    image.push_back(v.get<int>());
  }
  try {
    return Perm(std::move(image));
  } catch (const std::invalid_argument& e) {
    throw proof_format_error(e.what());
  }
}

json params_to_json(const ProofTree& t) {
  json p = json::object();
  switch (t.rule) {
    case Rule::Const:
      break;
    case Rule::Id:
      p["pi"] = perm_to_json(*t.params.pi);
      p["rho"] = perm_to_json(*t.params.rho);
      break;
    case Rule::Sym:
      p["i"] = *t.params.i;
      p["j"] = *t.params.j;
      break;
    case Rule::Neg1:
    case Rule::Neg2:
      p["i"] = *t.params.i;
      p["k"] = *t.params.k;
      p["principal"] = render(*t.params.principal);
      break;
    case Rule::Neg3:
    case Rule::QL:
    case Rule::QR:
    case Rule::WeakL:
    case Rule::WeakR:
    case Rule::ConL:
    case Rule::ConR:
      p["principal"] = render(*t.params.principal);
      break;
    case Rule::Cut:
      p["formula"] = render(*t.params.cut);
      break;
  }
  return p;
}

json node_to_json(const ProofTree& t) {
  json node = json::object();
  node["rule"] = rule_name(t.rule);
  node["params"] = params_to_json(t);
  node["conclusion"] = render(t.conclusion);
  json prems = json::array();
  for (const ProofTree& p : t.premises) prems.push_back(node_to_json(p));
  node["premises"] = std::move(prems);
  return node;
}

int int_field(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw proof_format_error(std::string("field ") + key + " must be an integer");
  return v.get<int>();
}

std::string str_field(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw proof_format_error(std::string("field ") + key + " must be a string");
  return v.get<std::string>();
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const char* where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw proof_format_error(std::string("unknown field '") + key + "' in " + where);
  }
  for (const char* a : allowed)
    if (!obj.contains(a)) throw proof_format_error(std::string("missing field '") + a + "' in " + where);
}

RuleParams params_from_json(Rule rule, const json& p, int n) {
  if (!p.is_object()) throw proof_format_error("params must be an object");
  RuleParams out;
  auto formula_field = [&](const char* key) { return parse_formula(str_field(p, key), n); };
  switch (rule) {
    case Rule::Const:
      check_keys(p, {}, "params");
      break;
    case Rule::Id:
      check_keys(p, {"pi", "rho"}, "params");
      out.pi = perm_from_json(p.at("pi"));
      out.rho = perm_from_json(p.at("rho"));
      break;
    case Rule::Sym:
      check_keys(p, {"i", "j"}, "params");
      out.i = int_field(p, "i");
      out.j = int_field(p, "j");
      break;
    case Rule::Neg1:
    case Rule::Neg2:
      check_keys(p, {"i", "k", "principal"}, "params");
      out.i = int_field(p, "i");
      out.k = int_field(p, "k");
      out.principal = formula_field("principal");
      break;
    case Rule::Neg3:
    case Rule::QL:
    case Rule::QR:
    case Rule::WeakL:
    case Rule::WeakR:
    case Rule::ConL:
    case Rule::ConR:
      check_keys(p, {"principal"}, "params");
      out.principal = formula_field("principal");
      break;
    case Rule::Cut:
      check_keys(p, {"formula"}, "params");
      out.cut = formula_field("formula");
      break;
  }
  return out;
}

ProofTree node_from_json(const json& node, int n, int depth) {
  if (depth > 10000) throw proof_format_error("proof nesting too deep");
  if (!node.is_object()) throw proof_format_error("proof node must be an object");
  check_keys(node, {"rule", "params", "conclusion", "premises"}, "proof node");
  std::string rname = str_field(node, "rule");
  auto rule = rule_from_name(rname);
  if (!rule) throw proof_format_error("unknown rule name '" + rname + "'");
  ProofTree t;
  t.rule = *rule;
  try {
    t.conclusion = parse_sequent(str_field(node, "conclusion"), n);
  } catch (const parse_error& e) {
    throw proof_format_error(std::string("bad conclusion: ") + e.what());
  }
  try {
    t.params = params_from_json(*rule, node.at("params"), n);
  } catch (const parse_error& e) {
    throw proof_format_error(std::string("bad params formula: ") + e.what());
  }
  const auto& prems = node.at("premises");
  if (!prems.is_array()) throw proof_format_error("premises must be an array");
  for (const auto& p : prems) t.premises.push_back(node_from_json(p, n, depth + 1));
  return t;
}

}  // namespace

std::string proof_to_json(const ProofTree& t, bool pretty) {
  json doc = json::object();
  doc["format_version"] = kProofFormatVersion;
  doc["n"] = t.conclusion.n;
  doc["proof"] = node_to_json(t);
  return pretty ? doc.dump(2) : doc.dump();
}

LoadedProof proof_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw proof_format_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw proof_format_error("proof document must be an object");
  check_keys(doc, {"format_version", "n", "proof"}, "proof document");
  if (int_field(doc, "format_version") != kProofFormatVersion)
    throw proof_format_error("unsupported format_version");
  int n = int_field(doc, "n");
  if (n < 2) throw proof_format_error("n must be >= 2");
  return LoadedProof{n, node_from_json(doc.at("proof"), n, 0)};
}

}  // namespace npc
