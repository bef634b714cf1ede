#include "nlie/report.hpp"

#include <json.hpp>

#include <sstream>

namespace nlie {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string digest_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

void Report::add(std::string key, std::string value) {
  payload.emplace_back(std::move(key), std::move(value));
}

void Report::add_check(std::string label, bool pass) {
  checks.push_back(ReportCheck{std::move(label), pass});
}

bool Report::ok() const {
  for (const ReportCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  if (!input_digest.empty()) out << "input-digest: " << input_digest << "\n";
  for (const auto& [key, value] : payload) out << key << ": " << value << "\n";
  for (const ReportCheck& c : checks)
    out << "check " << c.label << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  out << "status: " << (ok() ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  if (!input_digest.empty()) doc["input_digest"] = input_digest;
  nlohmann::ordered_json body = nlohmann::ordered_json::object();
  for (const auto& [key, value] : payload) body[key] = value;
  doc["payload"] = std::move(body);
  nlohmann::ordered_json checklist = nlohmann::ordered_json::array();
  for (const ReportCheck& c : checks)
    checklist.push_back({{"label", c.label}, {"pass", c.pass}});
  doc["checks"] = std::move(checklist);
  doc["status"] = ok() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace nlie
