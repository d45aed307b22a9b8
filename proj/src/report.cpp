#include "sftlab/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sftlab {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex;
  for (int i = 15; i >= 0; --i) out << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
  return out.str();
}

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a_hex(buf.str());
}

nlohmann::ordered_json report_envelope(const std::string& command,
                                       const nlohmann::ordered_json& params,
                                       const nlohmann::ordered_json& result) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["params"] = params;
  j["result"] = result;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << text;
}

}  // namespace sftlab
