#pragma once

#include "projrigid/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

using namespace projrigid;

inline std::string data_path(const std::string& name) {
    return std::string(PROJRIGID_DATA_DIR) + "/" + name;
}

#ifdef PROJRIGID_GOLDEN_DIR
inline const nlohmann::json& frozen() {
    static const nlohmann::json j = [] {
        std::ifstream in(std::string(PROJRIGID_GOLDEN_DIR) + "/frozen.json");
        return nlohmann::json::parse(in);
    }();
    return j;
}
#endif

// Matrix from rows of field-element strings in the frozen grammar.
inline Matrix mat_str(const std::vector<std::vector<std::string>>& rows, int d) {
    Matrix m(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(rows.at(0).size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = parse_field(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], d);
    return m;
}

inline Matrix mat_json(const nlohmann::json& rows, int d) {
    return matrix_from_json(rows, d);
}

inline Vector vec_str(const std::vector<std::string>& entries, int d) {
    Vector v(static_cast<Eigen::Index>(entries.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) = parse_field(entries[static_cast<std::size_t>(i)], d);
    return v;
}

inline std::vector<std::string> render_vec(const Vector& v) {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(render_field(v(i)));
    return out;
}

struct Loaded {
    InputDocument doc;
    Representation rep;
};

inline Loaded load(const std::string& name) {
    InputDocument doc = load_input(data_path(name));
    Representation rep = build_representation(doc);
    return {std::move(doc), std::move(rep)};
}

}  // namespace testutil
