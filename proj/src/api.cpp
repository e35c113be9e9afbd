#include "trinim/api.hpp"

#include <algorithm>

#include "trinim/classifier.hpp"
#include "trinim/game.hpp"
#include "trinim/golden.hpp"
#include "trinim/text.hpp"

namespace trinim::api {

namespace {

// Request validation failure carrying its HTTP status.
struct RequestError {
  int status;
  std::string message;
};

Response error(int status, std::string message) {
  return {status, Json{{"error", std::move(message)}}};
}

Count query_count(const Query& query, const std::string& key) {
  const auto it = query.find(key);
  if (it == query.end()) throw RequestError{400, "missing query parameter '" + key + "'"};
  try {
    return parse_count(it->second);
  } catch (const BoundExceeded&) {
    throw RequestError{422, "'" + key + "' exceeds " + std::to_string(kCoordMax)};
  } catch (const DomainError&) {
    throw RequestError{400, "'" + key + "' must be a non-negative integer"};
  }
}

TrianglePosition query_position(const Query& query) {
  return {query_count(query, "x"), query_count(query, "y"), query_count(query, "z")};
}

Convention convention_from(const std::string* text) {
  if (!text) return Convention::Normal;
  try {
    return parse_convention(*text);
  } catch (const DomainError&) {
    throw RequestError{400, "convention must be 'normal' or 'misere'"};
  }
}

Count json_count(const Json& value, const std::string& what, Count max) {
  if (!value.is_number_integer()) throw RequestError{400, what + " must be an integer"};
  if (!value.is_number_unsigned()) throw RequestError{400, what + " must be non-negative"};
  const Count v = value.get<Count>();
  if (v > max) throw RequestError{422, what + " exceeds " + std::to_string(max)};
  return v;
}

Json nullable_position(const std::optional<TrianglePosition>& p) {
  return p ? position_json(*p) : Json(nullptr);
}

Json nullable_move(const std::optional<TriangleMove>& m) {
  return m ? move_json(*m) : Json(nullptr);
}

}  // namespace

Json position_json(const TrianglePosition& p) { return Json::array({p.x, p.y, p.z}); }

Json move_json(const TriangleMove& m) {
  return {{"edge", edge_name(m.edge)}, {"take", m.take}, {"give", m.give}};
}

Json move_with_result_json(const TrianglePosition& from, const TriangleMove& m) {
  Json j = move_json(m);
  j["result"] = position_json(apply_move(from, m));
  return j;
}

Service::Service(ServiceOptions options)
    : options_(options),
      grundy_table_(solve_triangle(options.grundy_bound, Convention::Normal,
                                   {.grundy = true, .limit = options.grundy_bound})) {}

Response Service::health() const { return {200, Json{{"status", "ok"}}}; }

Response Service::classify(const Query& query) const {
  try {
    const auto p = query_position(query);
    const auto it = query.find("convention");
    const Convention c = convention_from(it == query.end() ? nullptr : &it->second);
    const auto result = trinim::classify(p, c);

    Json moves = Json::array();
    bool complete = true;
    if (std::max({p.x, p.y, p.z}) <= options_.all_moves_coord_limit) {
      for (const auto& m : all_winning_moves(p, c, options_.all_moves_coord_limit)) {
        moves.push_back(move_with_result_json(p, m));
      }
    } else if (const auto m = winning_move(p, c)) {
      moves.push_back(move_with_result_json(p, *m));
      complete = false;
    }

    Json conditions = Json::array();
    const auto rots = rotations(p);
    for (int k = 0; k < 3; ++k) {
      const auto& [a, b, cc] = rots[k];
      conditions.push_back({{"rotation", k},
                            {"a", a},
                            {"b", b},
                            {"c", cc},
                            {"sum_matches", a == b + cc},
                            {"b_geq_phi_c", geq_phi(b, cc)}});
    }

    Json body;
    body["position"] = position_json(p);
    body["outcome"] = outcome_name(result.outcome);
    body["convention"] = convention_name(c);
    body["matched_set"] = result.matched_set == MatchedSet::None
                              ? Json(nullptr)
                              : Json(std::string(matched_set_name(result.matched_set)));
    body["witness_rotation"] =
        result.witness_rotation ? Json(*result.witness_rotation) : Json(nullptr);
    body["terminal"] = is_terminal(p);
    body["winning_moves"] = std::move(moves);
    body["winning_moves_complete"] = complete;
    body["grundy"] = grundy_table_.contains(p) ? Json(grundy_table_.grundy(p)) : Json(nullptr);
    body["sum_conditions"] = std::move(conditions);
    return {200, std::move(body)};
  } catch (const RequestError& e) {
    return error(e.status, e.message);
  }
}

Response Service::grundy(const Query& query) const {
  try {
    const auto p = query_position(query);
    if (!grundy_table_.contains(p)) {
      return error(422, "total " + std::to_string(total_tokens(p)) + " exceeds the Grundy bound " +
                            std::to_string(grundy_table_.bound()));
    }
    return {200, Json{{"position", position_json(p)}, {"grundy", grundy_table_.grundy(p)}}};
  } catch (const RequestError& e) {
    return error(e.status, e.message);
  }
}

Response Service::move(std::string_view body) const {
  try {
    const Json request = Json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object()) {
      throw RequestError{400, "body must be a JSON object"};
    }
    if (!request.contains("position") || !request["position"].is_array() ||
        request["position"].size() != 3) {
      throw RequestError{400, "position must be an array [x, y, z]"};
    }
    const auto& pos = request["position"];
    const TrianglePosition p{json_count(pos[0], "position[0]", kCoordMax),
                             json_count(pos[1], "position[1]", kCoordMax),
                             json_count(pos[2], "position[2]", kCoordMax)};
    if (!request.contains("move") || !request["move"].is_object()) {
      throw RequestError{400, "move must be an object {edge, take, give}"};
    }
    const auto& mv = request["move"];
    if (!mv.contains("edge") || !mv["edge"].is_string()) {
      throw RequestError{400, "move.edge must be one of XY, YZ, ZX"};
    }
    if (!mv.contains("take") || !mv.contains("give")) {
      throw RequestError{400, "move needs take and give"};
    }
    TriangleMove m;
    try {
      m.edge = parse_edge(mv["edge"].get<std::string>());
    } catch (const DomainError&) {
      throw RequestError{400, "move.edge must be one of XY, YZ, ZX"};
    }
    m.take = json_count(mv["take"], "move.take", 3 * kCoordMax);
    m.give = json_count(mv["give"], "move.give", 3 * kCoordMax);
    std::optional<std::string> conv_text;
    if (request.contains("convention")) {
      if (!request["convention"].is_string()) throw RequestError{400, "convention must be a string"};
      conv_text = request["convention"].get<std::string>();
    }
    const Convention c = convention_from(conv_text ? &*conv_text : nullptr);

    Json out;
    out["valid"] = false;
    out["next"] = nullptr;
    out["next_outcome"] = nullptr;
    out["engine_move"] = nullptr;
    out["engine_next"] = nullptr;
    out["engine_next_outcome"] = nullptr;
    out["terminal_after"] = "none";
    out["winner"] = nullptr;

    if (!is_legal(p, m)) {
      try {
        apply_move(p, m);
        out["reason"] = "illegal move";
      } catch (const IllegalMove& e) {
        out["reason"] = e.what();
      }
      return {409, std::move(out)};
    }

    const auto next = apply_move(p, m);
    out["valid"] = true;
    out["next"] = position_json(next);
    out["next_outcome"] = outcome_name(outcome(next, c));
    // The engine is the player to move at `next`; the human moved last.
    if (is_terminal(next)) {
      out["terminal_after"] = "human";
      out["winner"] = mover_wins_at_terminal(c) ? "engine" : "human";
      return {200, std::move(out)};
    }
    const auto reply = engine_move(next, c);
    const auto after = apply_move(next, *reply);
    out["engine_move"] = nullable_move(reply);
    out["engine_next"] = nullable_position(after);
    out["engine_next_outcome"] = outcome_name(outcome(after, c));
    if (is_terminal(after)) {
      out["terminal_after"] = "engine";
      out["winner"] = mover_wins_at_terminal(c) ? "human" : "engine";
    }
    return {200, std::move(out)};
  } catch (const RequestError& e) {
    return error(e.status, e.message);
  }
}

}  // namespace trinim::api
