#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fraclab {

struct CachedEigenpairs {
    std::vector<double> eigenvalues;
    Eigen::MatrixXd vectors;
    double raw_min_eigenvalue = 0.0;
};

// Binary eigenpair store, one file per key. Keys should hash everything the
// decomposition depends on (fractal definition, M, n, boundary kind).
class EigenCache {
public:
    EigenCache(std::filesystem::path directory, std::string fractal_fingerprint);

    std::string key(int M, int n, const std::string& boundary) const;
    std::optional<CachedEigenpairs> load(const std::string& key, int expected_states) const;
    void store(const std::string& key, const CachedEigenpairs& pairs) const;

    int hits() const { return hits_; }
    int misses() const { return misses_; }
    void record(bool hit) const { hit ? ++hits_ : ++misses_; }

private:
    std::filesystem::path dir_;
    std::string fingerprint_;
    mutable int hits_ = 0;
    mutable int misses_ = 0;
};

}  // namespace fraclab
