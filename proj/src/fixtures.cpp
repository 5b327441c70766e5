#include "cesaro/fixtures.hpp"

#include "cesaro/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

namespace cesaro {

CMatrix assani_matrix() {
    CMatrix m(2, 2);
    m << Complex(-1, 0), Complex(2, 0), Complex(0, 0), Complex(-1, 0);
    return m;
}

CMatrix jordan1_matrix() {
    CMatrix m(2, 2);
    m << Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
    return m;
}

CMatrix diag_peripheral_matrix() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = Complex(1, 0);
    m(1, 1) = Complex(0.5, 0);
    return m;
}

CMatrix rotation_matrix() {
    CMatrix m(2, 2);
    m << Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 0);
    return m;
}

CMatrix diag3_matrix() {
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = Complex(1, 0);
    m(1, 1) = Complex(-0.9, 0);
    m(2, 2) = Complex(0, 0.3);
    return m;
}

CMatrix random_matrix(std::int64_t dim, std::uint64_t seed) {
    if (dim < 1)
        throw std::invalid_argument("random_matrix: dim must be >= 1");
    auto next = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto uniform = [&next]() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    };
    CMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) {
            const double re = uniform();
            const double im = uniform();
            m(r, c) = Complex(re, im);
        }
    return m;
}

namespace {

Fixture load_fixture_file(const std::filesystem::path& path) {
    return {path.stem().string(), matrix_from_json(load_json_file(path.string()))};
}

} // namespace

Fixture resolve_fixture(const std::string& name_or_path) {
    namespace fs = std::filesystem;

    if (fs::exists(name_or_path) && fs::is_regular_file(name_or_path))
        return load_fixture_file(name_or_path);

    const char* env = std::getenv("CESARO_LAB_FIXTURES");
    const fs::path dir = env != nullptr ? fs::path(env) : fs::path("fixtures");
    const fs::path candidate = dir / (name_or_path + ".json");
    if (fs::exists(candidate) && fs::is_regular_file(candidate))
        return load_fixture_file(candidate);

    if (name_or_path == "assani")
        return {"assani", assani_matrix()};
    if (name_or_path == "jordan1")
        return {"jordan1", jordan1_matrix()};
    if (name_or_path == "diag_peripheral")
        return {"diag_peripheral", diag_peripheral_matrix()};
    if (name_or_path == "rotation")
        return {"rotation", rotation_matrix()};
    if (name_or_path == "diag3")
        return {"diag3", diag3_matrix()};
    if (name_or_path.rfind("random", 0) == 0) {
        const std::string digits = name_or_path.substr(6);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            const long dim = std::strtol(digits.c_str(), nullptr, 10);
            if (dim >= 1 && dim <= 16)
                return {name_or_path, random_matrix(dim, 42 + static_cast<std::uint64_t>(dim))};
        }
    }
    throw std::invalid_argument("unknown fixture '" + name_or_path +
                                "' (no such file, nothing under the fixture directory, and no "
                                "built-in by that name)");
}

} // namespace cesaro
