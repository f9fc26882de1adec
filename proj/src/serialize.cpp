#include "syzdepth/serialize.hpp"

#include <stdexcept>

namespace syzdepth {

namespace {

Json subset_json(Subset s) { return s.elements(); }

Subset subset_from(const Json& j, int n) {
  const auto elems = j.get<std::vector<int>>();
  for (int e : elems)
    if (e < 1 || e > n) throw std::invalid_argument("subset element " + std::to_string(e) + " outside 1..n");
  return Subset::of(elems);
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) {
    pieces.push_back({{"shift", subset_json(p.shift)},
                      {"removed", p.removed ? Json(*p.removed) : Json(nullptr)}});
  }
  Json out = {{"n", d.n}, {"k", d.k}, {"strategy", std::string(strategy_name(d.strategy))},
              {"pieces", std::move(pieces)}};
  if (d.fell_back) out["fallback"] = "matching";
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.n = j.at("n").get<int>();
  d.k = j.at("k").get<int>();
  if (d.n < 1 || d.n > kMaxVariables || d.k < 1 || d.k > d.n)
    throw std::invalid_argument("decomposition: bad n or k");
  d.strategy = parse_strategy(j.at("strategy").get<std::string>());
  d.fell_back = j.contains("fallback");
  for (const auto& p : j.at("pieces")) {
    HilbertPiece piece{subset_from(p.at("shift"), d.n), std::nullopt};
    if (p.contains("removed") && !p.at("removed").is_null()) piece.removed = p.at("removed").get<int>();
    d.pieces.push_back(piece);
  }
  return d;
}

Json to_json(const HookAssignment& h) {
  Json out = Json::array();
  for (const auto& [shift, hook] : h) {
    out.push_back({{"shift", subset_json(shift)},
                   {"mu", std::vector<int>(hook.mu.begin(), hook.mu.end())},
                   {"generator", subset_json(hook.generator)}});
  }
  return out;
}

HookAssignment hooks_from_json(const Json& j, int n) {
  HookAssignment out;
  for (const auto& entry : j) {
    const Subset shift = subset_from(entry.at("shift"), n);
    const auto mu = entry.at("mu").get<std::vector<int>>();
    if (mu.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("hook for " + shift.label() + ": mu must have n entries");
    Hook hook{Exponent(mu.begin(), mu.end()), subset_from(entry.at("generator"), n)};
    if (!out.emplace(shift, std::move(hook)).second)
      throw std::invalid_argument("duplicate hook for shift " + shift.label());
  }
  return out;
}

Json to_json(const PositivityReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"s", r.s},
          {"verdict", r.positive() ? "positive" : "negative"},
          {"witness_j", r.witness_j ? Json(*r.witness_j) : Json(nullptr)},
          {"witness_coeff", r.witness_coeff ? Json(r.witness_coeff->get_str()) : Json(nullptr)},
          {"checked_range", r.checked_range}};
}

Json to_json(const DepthResult& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"hdepth", r.hdepth},
          {"min_u", r.min_u},
          {"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"witness_positive", to_json(r.witness_positive)},
          {"witness_negative", r.witness_negative ? to_json(*r.witness_negative) : Json(nullptr)}};
}

Json to_json(const GammaSolution& s) {
  return {{"beta", static_cast<double>(s.beta)},
          {"gamma", static_cast<double>(s.gamma)},
          {"alpha0", static_cast<double>(s.alpha0)},
          {"residual", static_cast<double>(s.residual)},
          {"iterations", s.iterations},
          {"guard_hits", s.guard_hits}};
}

Json to_json(const StanleyReport& r) {
  Json family = Json::array();
  for (Subset g : r.dependent_family) family.push_back(subset_json(g));
  return {{"accepted", r.accepted},
          {"certified_depth", r.certified_depth ? Json(*r.certified_depth) : Json(nullptr)},
          {"failing_degree", r.failing_degree ? subset_json(*r.failing_degree) : Json(nullptr)},
          {"dependent_family", std::move(family)},
          {"chain_certified", r.chain_certified},
          {"rank_certified", r.rank_certified},
          {"message", r.message}};
}

}  // namespace syzdepth
