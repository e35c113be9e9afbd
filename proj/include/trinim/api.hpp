#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <string_view>

#include "trinim/solver.hpp"
#include "trinim/types.hpp"

namespace trinim::api {

using Json = nlohmann::ordered_json;
using Query = std::map<std::string, std::string>;

struct Response {
  int status = 200;
  Json body;
};

struct ServiceOptions {
  /// Grundy values are served for positions with total <= this bound.
  Count grundy_bound = 60;
  /// Above this coordinate, classify lists only the constructive move.
  Count all_moves_coord_limit = 1'000'000;
};

/// Stateless JSON handlers behind the HTTP endpoints. The client carries the
/// game position in every request; the only server state is the Grundy table
/// built in the constructor. Handlers are const and safe to call concurrently.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  /// GET /api/classify?x&y&z&convention
  Response classify(const Query& query) const;
  /// POST /api/move
  Response move(std::string_view body) const;
  /// GET /api/grundy?x&y&z
  Response grundy(const Query& query) const;
  /// GET /api/health
  Response health() const;

  const ServiceOptions& options() const { return options_; }

 private:
  ServiceOptions options_;
  SolveTable grundy_table_;
};

Json position_json(const TrianglePosition& p);
Json move_json(const TriangleMove& m);
/// {edge, take, give, result} as listed in classify responses.
Json move_with_result_json(const TrianglePosition& from, const TriangleMove& m);

}  // namespace trinim::api
