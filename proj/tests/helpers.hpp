#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "onto/error.hpp"

namespace test_helpers {

inline std::string source_path(const std::string& relative) {
    return std::string(ONTO_SOURCE_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs fn, which must throw onto::Error; hands the error back for code
// and message assertions.
template <class Fn> onto::Error capture_error(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const onto::Error& e) {
        return e;
    }
    throw std::runtime_error("expected an onto::Error, nothing was thrown");
}

} // namespace test_helpers
