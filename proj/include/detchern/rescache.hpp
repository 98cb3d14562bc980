#pragma once

#include <memory>
#include <optional>
#include <string>

#include "detchern/qpoly.hpp"

namespace detchern {

// Persistent store of computed q-polynomials, keyed by
// (kind, n, corank, method) and stamped with the artifact version; each
// record carries its coefficients as exact decimal strings plus a storage
// timestamp. A missing file is an empty cache; a corrupt file or malformed
// entry is ignored with a warning on stderr and never trusted.
class ResultCache {
public:
    static constexpr const char* version = "1";

    static ResultCache load(const std::string& path);

    std::optional<HClass> lookup(MatrixKind kind, int n, int corank,
                                 const std::string& method) const;
    void store(MatrixKind kind, int n, int corank, const std::string& method,
               const HClass& value);
    bool dirty() const { return dirty_; }
    void save(const std::string& path) const;
    std::size_t size() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    bool dirty_ = false;

    ResultCache();
};

} // namespace detchern
