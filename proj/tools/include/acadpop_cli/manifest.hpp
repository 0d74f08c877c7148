#pragma once

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace acadpop::cli {

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

/// Records what a command read, which flags it used and every file it wrote.
/// Files are first written under a temporary name and renamed on commit(), so
/// a failed command leaves no partial outputs behind.
class RunManifest {
 public:
  RunManifest(std::string command, std::filesystem::path output_dir);

  void add_input(const std::filesystem::path& path);
  void set_flag(const std::string& key, nlohmann::json value) { flags_[key] = std::move(value); }
  void set_config(const nlohmann::json& config) { config_ = config; }
  void set_window(int start, int end) { window_ = nlohmann::json::array({start, end}); }

  /// Stages `name` in the output directory.
  void write(const std::string& name, const std::function<void(std::ostream&)>& body);
  void write_json(const std::string& name, const nlohmann::json& doc);

  /// Renames staged files into place and writes manifest.json.
  nlohmann::json commit();
  /// Removes staged files.
  void abandon() noexcept;
  ~RunManifest();

 private:
  std::string command_;
  std::filesystem::path dir_;
  nlohmann::json inputs_ = nlohmann::json::array();
  nlohmann::json flags_ = nlohmann::json::object();
  nlohmann::json config_;
  nlohmann::json window_;
  std::vector<std::string> staged_;
  bool committed_ = false;
};

}  // namespace acadpop::cli
