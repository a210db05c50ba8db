#include "varbound/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace varbound {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& x) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < x.rows(); ++i) {
        json r = json::array(), m = json::array();
        for (std::size_t j = 0; j < x.cols(); ++j) {
            r.push_back(x(i, j).real());
            m.push_back(x(i, j).imag());
        }
        re.push_back(std::move(r));
        im.push_back(std::move(m));
    }
    return {{"rows", x.rows()}, {"cols", x.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix file: top level must be an object");
    for (const char* key : {"rows", "cols", "re", "im"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("matrix file: missing field '") + key + "'");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw std::invalid_argument("matrix file: rows and cols must be integers");
    const long rows = j["rows"].get<long>(), cols = j["cols"].get<long>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix file: rows and cols must be positive");

    auto read_part = [&](const char* key) {
        const json& a = j[key];
        if (!a.is_array() || static_cast<long>(a.size()) != rows)
            throw std::invalid_argument(std::string("matrix file: '") + key + "' must have " + std::to_string(rows) +
                                        " rows");
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(rows * cols));
        for (const auto& row : a) {
            if (!row.is_array() || static_cast<long>(row.size()) != cols)
                throw std::invalid_argument(std::string("matrix file: every row of '") + key + "' must have " +
                                            std::to_string(cols) + " entries");
            for (const auto& v : row) {
                if (!v.is_number()) throw std::invalid_argument(std::string("matrix file: non-numeric entry in '") + key + "'");
                const double d = v.get<double>();
                if (!std::isfinite(d)) throw std::invalid_argument("matrix file: entries must be finite");
                out.push_back(d);
            }
        }
        return out;
    };
    const auto re = read_part("re");
    const auto im = read_part("im");
    std::vector<cplx> entries(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) entries[k] = {re[k], im[k]};
    return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("matrix file '" + path + "': " + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& x) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file '" + path + "'");
    out << matrix_to_json(x).dump(2) << '\n';
}

json complex_to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json vector_to_json(std::span<const cplx> v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected a comma-separated integer list, got '" + text + "'");
        }
        if (used != item.size()) throw std::invalid_argument("expected a comma-separated integer list, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

}  // namespace varbound
