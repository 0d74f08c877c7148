#include "acadpop_cli/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#ifndef ACADPOP_VERSION
#define ACADPOP_VERSION "dev"
#endif

namespace acadpop::cli {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("sha256 init failed");
    }
  }
  void update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx_.get(), data, n); }
  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(kDigits[md[i] >> 4]);
      out.push_back(kDigits[md[i] & 0xF]);
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

std::filesystem::path staging_name(const std::filesystem::path& dir, const std::string& name) {
  return dir / ("." + name + ".partial");
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  Sha256 h;
  h.update(data.data(), data.size());
  return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  Sha256 h;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

RunManifest::RunManifest(std::string command, std::filesystem::path output_dir)
    : command_(std::move(command)), dir_(std::move(output_dir)) {}

RunManifest::~RunManifest() {
  if (!committed_) abandon();
}

void RunManifest::add_input(const std::filesystem::path& path) {
  inputs_.push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
}

void RunManifest::write(const std::string& name, const std::function<void(std::ostream&)>& body) {
  std::filesystem::create_directories(dir_);
  const auto tmp = staging_name(dir_, name);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    body(out);
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  staged_.push_back(name);
}

void RunManifest::write_json(const std::string& name, const nlohmann::json& doc) {
  write(name, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

void RunManifest::abandon() noexcept {
  std::error_code ec;
  for (const auto& name : staged_) std::filesystem::remove(staging_name(dir_, name), ec);
  staged_.clear();
}

nlohmann::json RunManifest::commit() {
  std::sort(staged_.begin(), staged_.end());
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& name : staged_) {
    std::filesystem::rename(staging_name(dir_, name), dir_ / name);
    outputs.push_back({{"file", name}, {"sha256", sha256_file(dir_ / name)}});
  }
  staged_.clear();
  committed_ = true;

  const auto config_digest = sha256_hex(nlohmann::json{{"command", command_}, {"flags", flags_}, {"config", config_}}.dump());
  std::string joined = config_digest;
  for (const auto& o : outputs) joined += "\n" + o["file"].get<std::string>() + " " + o["sha256"].get<std::string>();

  nlohmann::json manifest = {{"tool", "acadpop"},
                             {"version", ACADPOP_VERSION},
                             {"command", command_},
                             {"inputs", inputs_},
                             {"flags", flags_},
                             {"config_digest", config_digest},
                             {"window", window_},
                             {"output_dir", dir_.string()},
                             {"outputs", outputs},
                             {"digest", sha256_hex(joined)}};
  std::ofstream out(dir_ / "manifest.json", std::ios::binary | std::ios::trunc);
  out << manifest.dump(2) << '\n';
  return manifest;
}

}  // namespace acadpop::cli
