#include "ccn/matrix.hpp"
#include "ccn/tensor.hpp"

namespace ccn {

Matrix matrix_from_strings(std::size_t nrows, std::size_t ncols, const std::vector<std::string>& entries) {
    if (entries.size() != nrows * ncols) throw std::invalid_argument("wrong number of matrix entries");
    Matrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, Scalar::parse(entries[i * ncols + j]));
    return m;
}

QMatrix specialize(const Matrix& m, const std::map<Symbol, Rational>& point) {
    return m.map<Rational>([&](const Scalar& s) { return s.evaluate(point); });
}

Matrix to_symbolic(const QMatrix& m) {
    return m.map<Scalar>([](const Rational& r) { return Scalar(r); });
}

Matrix substitute(const Matrix& m, const std::map<Symbol, Scalar>& values) {
    return m.map<Scalar>([&](const Scalar& s) { return s.substitute(values); });
}

Matrix matrix_from_json(const nlohmann::json& j) {
    Matrix m(j.at("nrows").get<std::size_t>(), j.at("ncols").get<std::size_t>());
    for (auto& e : j.at("entries")) m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), Scalar::parse(e.at(2).get<std::string>()));
    return m;
}

std::size_t TensorSpace::dim() const {
    std::size_t d = 1;
    for (int i = 0; i < nslots; ++i) d *= static_cast<std::size_t>(N);
    return d;
}

std::size_t TensorSpace::index(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != nslots) throw std::invalid_argument("wrong number of tensor digits");
    std::size_t idx = 0;
    for (int d : digits) {
        if (d < 0 || d >= N) throw std::out_of_range("tensor digit out of range");
        idx = idx * N + d;
    }
    return idx;
}

std::vector<int> TensorSpace::digits(std::size_t index) const {
    std::vector<int> d(nslots);
    for (int s = nslots - 1; s >= 0; --s) {
        d[s] = static_cast<int>(index % N);
        index /= N;
    }
    return d;
}

}  // namespace ccn
