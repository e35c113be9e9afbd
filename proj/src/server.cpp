#include "trinim/server.hpp"

#include <httplib.h>

#include <stdexcept>

namespace trinim::api {

namespace {

Query to_query(const httplib::Params& params) {
  Query q;
  // First value wins for repeated keys.
  for (const auto& [key, value] : params) q.emplace(key, value);
  return q;
}

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

void mount(httplib::Server& server, const Service& service, const ServerOptions& options) {
  if (!options.allow_origin.empty()) {
    server.set_default_headers({{"Access-Control-Allow-Origin", options.allow_origin},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
  }
  server.Get("/api/health", [&service](const httplib::Request&, httplib::Response& res) {
    reply(res, service.health());
  });
  server.Get("/api/classify", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.classify(to_query(req.params)));
  });
  server.Get("/api/grundy", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.grundy(to_query(req.params)));
  });
  server.Post("/api/move", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.move(req.body));
  });
  if (!options.static_dir.empty() && !server.set_mount_point("/", options.static_dir)) {
    throw std::runtime_error("cannot serve static files from " + options.static_dir);
  }
}

bool serve(const ServerOptions& options, std::ostream& log,
           const std::function<void(int)>& on_ready) {
  log << "precomputing Grundy values up to total " << options.service.grundy_bound << "\n";
  const Service service(options.service);
  httplib::Server server;
  mount(server, service, options);

  int port = options.port;
  if (port == 0) {
    port = server.bind_to_any_port(options.host);
    if (port < 0) return false;
  } else if (!server.bind_to_port(options.host, port)) {
    return false;
  }
  log << "listening on http://" << options.host << ":" << port << "\n" << std::flush;
  if (on_ready) on_ready(port);
  return server.listen_after_bind();
}

}  // namespace trinim::api
