// log.hpp — minimal leveled logging to stderr

#pragma once

#include <iostream>
#include <string>

namespace mqed::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, quiet = 4 };

inline Level& threshold() {
    static Level level = Level::info;
    return level;
}

inline void emit(Level level, const std::string& tag, const std::string& msg) {
    if (level < threshold()) return;
    std::cerr << "[" << tag << "] " << msg << "\n";
}

inline void debug(const std::string& msg) { emit(Level::debug, "debug", msg); }
inline void info(const std::string& msg) { emit(Level::info, "info", msg); }
inline void warn(const std::string& msg) { emit(Level::warn, "warn", msg); }
inline void error(const std::string& msg) { emit(Level::error, "error", msg); }

inline Level parse_level(const std::string& name) {
    if (name == "debug") return Level::debug;
    if (name == "info") return Level::info;
    if (name == "warn") return Level::warn;
    if (name == "error") return Level::error;
    if (name == "quiet") return Level::quiet;
    throw std::invalid_argument("unknown log level '" + name + "'");
}

}  // namespace mqed::log
