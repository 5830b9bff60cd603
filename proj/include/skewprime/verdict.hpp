#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "json.hpp"

namespace skewprime {

using Json = nlohmann::json;

/// Three-valued outcome of a decision procedure.
///
/// Refuted always carries an exact, replayable witness in `detail`.
/// A positive result that only holds up to a search bound is reported as
/// Undecided with that bound; Proven is reserved for exact certificates.
struct Verdict {
  enum class Status { Proven, Refuted, Undecided };

  Status status = Status::Undecided;
  std::string certificate;     // short human-readable reason
  Json detail = Json::object();  // witness / certificate data for replay
  std::int64_t bound = -1;     // bound reached (Undecided only)

  bool proven() const { return status == Status::Proven; }
  bool refuted() const { return status == Status::Refuted; }
  bool undecided() const { return status == Status::Undecided; }

  static Verdict make_proven(std::string cert, Json detail = Json::object()) {
    Verdict v;
    v.status = Status::Proven;
    v.certificate = std::move(cert);
    v.detail = std::move(detail);
    return v;
  }

  static Verdict make_refuted(std::string cert, Json witness = Json::object()) {
    Verdict v;
    v.status = Status::Refuted;
    v.certificate = std::move(cert);
    v.detail = std::move(witness);
    return v;
  }

  static Verdict make_undecided(std::int64_t bound, std::string note = {},
                                Json detail = Json::object()) {
    Verdict v;
    v.status = Status::Undecided;
    v.certificate = std::move(note);
    v.detail = std::move(detail);
    v.bound = bound;
    return v;
  }

  std::string status_str() const {
    switch (status) {
      case Status::Proven: return "Proven";
      case Status::Refuted: return "Refuted";
      default: return "Undecided";
    }
  }

  Json to_json() const {
    Json j;
    j["status"] = status_str();
    if (!certificate.empty()) j["certificate"] = certificate;
    if (!detail.empty()) j["detail"] = detail;
    if (bound >= 0) j["bound"] = bound;
    return j;
  }
};

}  // namespace skewprime
