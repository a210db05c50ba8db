#ifndef VARBOUND_IO_HPP
#define VARBOUND_IO_HPP

#include "varbound/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace varbound {

/// {"rows": int, "cols": int, "re": [[f64]], "im": [[f64]]}
nlohmann::json matrix_to_json(const ComplexMatrix& x);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& x);

nlohmann::json complex_to_json(cplx z);  // {"re": .., "im": ..}
nlohmann::json vector_to_json(std::span<const cplx> v);

/// "2,3,5" -> {2, 3, 5}
std::vector<int> parse_int_list(const std::string& text);

}  // namespace varbound

#endif
