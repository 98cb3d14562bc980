#include "detchern/rescache.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "detchern/errors.hpp"

namespace detchern {

namespace {

std::string cache_key(MatrixKind kind, int n, int corank, const std::string& method) {
    std::ostringstream os;
    os << "q/" << kind_name(kind) << "/" << n << "/" << corank << "/" << method;
    return os.str();
}

} // namespace

struct ResultCache::Impl {
    struct Record {
        std::vector<Rational> coeffs;
        std::string stored; // seconds since the epoch, informational only
    };
    std::map<std::string, Record> entries;
};

namespace {

std::string now_stamp() { return std::to_string(static_cast<long long>(std::time(nullptr))); }

} // namespace

ResultCache::ResultCache() : impl_(std::make_shared<Impl>()) {}

ResultCache ResultCache::load(const std::string& path) {
    ResultCache cache;
    std::ifstream in(path);
    if (!in) return cache;

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        std::cerr << "warning: ignoring corrupt result cache at " << path << "\n";
        return cache;
    }
    if (!doc.is_object() || doc.value("version", "") != version) {
        std::cerr << "warning: ignoring result cache with unknown version at " << path << "\n";
        return cache;
    }
    if (!doc.contains("entries") || !doc["entries"].is_object()) return cache;

    for (const auto& [key, val] : doc["entries"].items()) {
        if (!val.is_object() || !val.contains("coefficients") || !val["coefficients"].is_array()) {
            std::cerr << "warning: skipping malformed cache entry " << key << "\n";
            continue;
        }
        std::vector<Rational> coeffs;
        bool ok = true;
        for (const auto& c : val["coefficients"]) {
            if (!c.is_string()) {
                ok = false;
                break;
            }
            try {
                coeffs.emplace_back(c.get<std::string>());
            } catch (...) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            std::cerr << "warning: skipping malformed cache entry " << key << "\n";
            continue;
        }
        Impl::Record rec{std::move(coeffs), val.value("stored", "")};
        cache.impl_->entries.emplace(key, std::move(rec));
    }
    return cache;
}

std::optional<HClass> ResultCache::lookup(MatrixKind kind, int n, int corank,
                                          const std::string& method) const {
    auto it = impl_->entries.find(cache_key(kind, n, corank, method));
    if (it == impl_->entries.end()) return std::nullopt;
    const long N = ambient_dim(kind, n);
    if (it->second.coeffs.size() != static_cast<std::size_t>(N) + 1) {
        std::cerr << "warning: skipping cache entry with wrong length for "
                  << cache_key(kind, n, corank, method) << "\n";
        return std::nullopt;
    }
    return HClass(N, it->second.coeffs);
}

void ResultCache::store(MatrixKind kind, int n, int corank, const std::string& method,
                        const HClass& value) {
    auto key = cache_key(kind, n, corank, method);
    auto it = impl_->entries.find(key);
    if (it != impl_->entries.end() && it->second.coeffs == value.coeffs()) return;
    impl_->entries.insert_or_assign(std::move(key), Impl::Record{value.coeffs(), now_stamp()});
    dirty_ = true;
}

void ResultCache::save(const std::string& path) const {
    nlohmann::ordered_json doc;
    doc["version"] = version;
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [key, rec] : impl_->entries) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : rec.coeffs) arr.push_back(to_decimal(c));
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        obj["coefficients"] = std::move(arr);
        obj["stored"] = rec.stored;
        entries[key] = std::move(obj);
    }
    doc["entries"] = std::move(entries);
    std::ofstream out(path);
    if (!out) throw usage_error("cannot write result cache to " + path);
    out << doc.dump(1) << "\n";
}

std::size_t ResultCache::size() const {
    return impl_->entries.size();
}

} // namespace detchern
