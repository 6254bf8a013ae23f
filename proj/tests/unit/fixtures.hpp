#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "nmds/codes.hpp"

namespace fixtures {

inline std::string read_text(const std::string& name) {
    std::ifstream in(std::string(NMDS_TEST_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline nmds::GeneratorMatrix matrix(const std::string& name) { return nmds::parse_matrix(read_text(name)); }

}  // namespace fixtures
