#include "symmom/fixtures.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "symmom/errors.hpp"
#include "symmom/factorization.hpp"

namespace symmom {

namespace {

Newform parse_one(const nlohmann::json& obj) {
  Newform f;
  f.level = obj.at("level").get<std::int64_t>();
  f.label = obj.value("label", std::string("?"));
  if (obj.value("weight", 2) != 2) throw domain_error("fixture " + f.label + ": only weight 2 is supported");
  if (!is_squarefree(f.level)) throw domain_error("fixture " + f.label + ": level must be squarefree");
  f.p_max = obj.at("p_max").get<std::int64_t>();
  if (obj.contains("lpoint_half")) f.lpoint_half = obj.at("lpoint_half").get<double>();
  for (const auto& [key, val] : obj.at("ap").items()) {
    const std::int64_t p = std::stoll(key);
    const double ap = val.get<double>();
    const double lam = ap / std::sqrt(double(p));
    if (f.level % p == 0) {
      if (std::abs(std::abs(lam) * std::sqrt(double(p)) - 1.0) > 1e-6) {
        throw domain_error("fixture " + f.label + ": |lambda_f(p)| != 1/sqrt(p) at ramified p = " +
                           std::to_string(p));
      }
    } else if (std::abs(lam) > 2.0 + 1e-9) {
      throw domain_error("fixture " + f.label + ": Ramanujan bound violated at p = " + std::to_string(p));
    }
    f.lambda[p] = lam;
  }
  if (f.lambda.empty()) throw domain_error("fixture " + f.label + ": empty eigenvalue table");
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open fixture file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fetch_remote(std::int64_t level, const std::string& base_override);

}  // namespace

std::vector<Newform> parse_newforms(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw domain_error(std::string("malformed newform payload: ") + e.what());
  }
  std::vector<Newform> out;
  if (doc.is_array()) {
    for (const auto& obj : doc) out.push_back(parse_one(obj));
  } else {
    out.push_back(parse_one(doc));
  }
  return out;
}

std::vector<Newform> fetch_newforms(std::int64_t level, Source source, const std::string& location) {
  if (level < 1 || !is_squarefree(level)) {
    throw domain_error("fetch_newforms: level must be a squarefree positive integer, got " +
                       std::to_string(level));
  }
  if (source == Source::fixture) {
    const std::string dir = location.empty() ? "data/fixtures" : location;
    return parse_newforms(read_file(dir + "/newforms_" + std::to_string(level) + ".json"));
  }
  return parse_newforms(fetch_remote(level, location));
}

namespace {

std::string fetch_remote(std::int64_t level, const std::string& base_override) {
  std::string base = base_override;
  if (base.empty()) {
    const char* env = std::getenv("SYMMOM_DB_BASE");
    if (env == nullptr || *env == '\0') {
      throw network_error("fetch_newforms: no remote base URL (set SYMMOM_DB_BASE)");
    }
    base = env;
  }
  const std::string path = "/newforms/" + std::to_string(level) + ".json";

  // serve from the on-disk cache when present
  std::string cache_dir;
  if (const char* env = std::getenv("SYMMOM_CACHE"); env != nullptr && *env != '\0') cache_dir = env;
  const std::string cache_file =
      cache_dir.empty() ? std::string() : cache_dir + "/newforms_" + std::to_string(level) + ".json";
  if (!cache_file.empty() && std::filesystem::exists(cache_file)) return read_file(cache_file);

  std::string host = base;
  if (host.rfind("http://", 0) == 0) host = host.substr(7);
  if (host.rfind("https://", 0) == 0) {
    throw network_error("fetch_newforms: https base URLs are not supported by this build; use a plain "
                        "http mirror or pre-populate SYMMOM_CACHE");
  }
  std::string prefix;
  if (auto slash = host.find('/'); slash != std::string::npos) {
    prefix = host.substr(slash);
    host = host.substr(0, slash);
  }

  httplib::Client client(host);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get((prefix + path).c_str());
  if (!res) throw network_error("fetch_newforms: request to " + host + prefix + path + " failed");
  if (res->status != 200) {
    throw network_error("fetch_newforms: HTTP " + std::to_string(res->status) + " from " + host + prefix + path);
  }
  if (!cache_file.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(cache_file, std::ios::binary);
    out << res->body;  // cached verbatim, before any normalisation
  }
  return res->body;
}

}  // namespace

}  // namespace symmom
