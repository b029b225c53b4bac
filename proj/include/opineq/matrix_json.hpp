#pragma once

// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}, row-major nested arrays.

#include "opineq/matrix.hpp"

#include "json.hpp"

namespace opineq {

inline nlohmann::json to_json(const ComplexMatrix& a) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json rrow = nlohmann::json::array();
        nlohmann::json irow = nlohmann::json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) {
            rrow.push_back(a(i, j).real());
            irow.push_back(a(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& re = j.at("re");
        const auto& im = j.at("im");
        if (re.size() != rows || im.size() != rows) {
            throw Error(ErrorCode::ParseError, "matrix JSON row count mismatch");
        }
        std::vector<Complex> entries;
        entries.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (re[i].size() != cols || im[i].size() != cols) {
                throw Error(ErrorCode::ParseError, "matrix JSON column count mismatch");
            }
            for (std::size_t k = 0; k < cols; ++k) entries.emplace_back(re[i][k].get<double>(), im[i][k].get<double>());
        }
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("matrix JSON: ") + e.what());
    }
}

} // namespace opineq
