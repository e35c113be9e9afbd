#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "trinim/api.hpp"

namespace httplib {
class Server;
}

namespace trinim::api {

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8173;
  /// Served at "/" when non-empty.
  std::string static_dir;
  /// Value for Access-Control-Allow-Origin; empty keeps same-origin only.
  std::string allow_origin;
  ServiceOptions service;
};

/// Registers /api/* routes (and the static mount) on `server`. Fails with
/// std::runtime_error when static_dir is set but cannot be mounted.
void mount(httplib::Server& server, const Service& service, const ServerOptions& options);

/// Builds the Service (Grundy table first), then listens until stopped.
/// `on_ready` is called with the bound port once the listener is up.
/// Returns false when the port cannot be bound.
bool serve(const ServerOptions& options, std::ostream& log,
           const std::function<void(int)>& on_ready = {});

}  // namespace trinim::api
