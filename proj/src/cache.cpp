#include "coxh4/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace coxh4 {

std::string CacheStore::path_of(const std::string& kind) const {
    return dir_ + "/" + kind + ".cache";
}

std::optional<std::string> CacheStore::load(
    const std::string& kind, const std::string& input_hash,
    const std::function<bool(const std::string&)>& validate) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_of(kind));
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    if (header != "coxh4-cache v1 kind=" + kind + " hash=" + input_hash) return std::nullopt;
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (!validate(payload)) return std::nullopt;
    return payload;
}

void CacheStore::store(const std::string& kind, const std::string& input_hash,
                       const std::string& payload) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_of(kind), std::ios::trunc);
    out << "coxh4-cache v1 kind=" << kind << " hash=" << input_hash << "\n";
    out << payload;
}

}  // namespace coxh4
