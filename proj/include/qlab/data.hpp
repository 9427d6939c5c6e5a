#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/alexander.hpp"
#include "qlab/cohomology.hpp"

#ifndef QLAB_DATA_DIR
#define QLAB_DATA_DIR "data"
#endif

namespace qlab {

/// Bundled data directory; the QUANDLE_LAB_DATA environment variable wins.
inline std::string data_dir() {
    if (const char* env = std::getenv("QUANDLE_LAB_DATA")) return env;
    return QLAB_DATA_DIR;
}

struct CocycleInfo {
    std::string name;      // canonical builtin name
    std::string file;      // under <data>/cocycles/
    std::string quandle;   // spec string of the quandle it lives on
    long long modulus;     // native coefficient order (0 = integers)
    int degree;
};

inline const std::vector<CocycleInfo>& builtin_cocycles() {
    static const std::vector<CocycleInfo> table = {
        {"s4-phi", "s4-phi.txt", "S4", 2, 2},
        {"z3-phi", "z3-phi.txt", "A:3:1,0,1", 3, 2},
        {"theta1", "theta1.txt", "R:4", 2, 2},
        {"theta2", "theta2.txt", "R:6", 2, 2},
        {"theta3", "theta3.txt", "R:8", 2, 2},
        {"theta4", "theta4.txt", "A:2:1,0,1", 2, 2},
        {"theta5", "theta5.txt", "A:2:1,1,1", 2, 2},
        {"theta6", "theta6.txt", "A:3:1,0,1", 3, 2},
        {"theta7", "theta7.txt", "A:3:2,0,1", 2, 2},
        {"theta8", "theta8.txt", "A:3:1,1,1", 3, 2},
        {"theta9", "theta9.txt", "L:8:5", 2, 2},
        {"theta10", "theta10.txt", "L:9:7", 2, 2},
        {"3-2-A", "3-2-A.txt", "R:3", 3, 3},
        {"3-3-A-a", "3-3-A-a.txt", "A:2:1,1,1", 2, 3},
        {"3-3-A-b", "3-3-A-b.txt", "A:2:1,1,1", 2, 3},
        {"4-2-A-a", "4-2-A-a.txt", "R:4", 2, 3},
        {"4-2-A-b", "4-2-A-b.txt", "R:4", 2, 3},
        {"4-2-B-a", "4-2-B-a.txt", "A:2:1,0,1", 2, 3},
        {"4-2-B-b", "4-2-B-b.txt", "A:2:1,0,1", 2, 3},
        {"5-2-A", "5-2-A.txt", "R:5", 5, 3},
        {"6-2-A", "6-2-A.txt", "R:3", 3, 3},
        {"6-2-B-a", "6-2-B-a.txt", "R:6", 3, 3},
        {"6-2-B-b", "6-2-B-b.txt", "R:6", 3, 3},
        {"6-2-B-c", "6-2-B-c.txt", "R:6", 3, 3},
        {"eta1", "eta1.txt", "S4", 2, 3},
        {"2eta1", "2eta1.txt", "S4", 4, 3},
        {"eta2", "eta2.txt", "S4", 4, 3},
        {"eta11", "eta11.txt", "S4", 0, 3},
    };
    return table;
}

inline const CocycleInfo* find_builtin_cocycle(const std::string& name) {
    for (const auto& c : builtin_cocycles())
        if (c.name == name) return &c;
    return nullptr;
}

/// Load a builtin (by name, with optional `neg:` or `<k>x:` scaling prefix)
/// or a cocycle file. The result is validated as a cocycle over its
/// coefficient group. `modulus_override` < 0 keeps the native coefficient order.
inline Cochain load_cocycle(const std::string& name_or_path, const Quandle& q, long long modulus_override = -1) {
    std::string name = name_or_path;
    long long scale = 1;
    if (name.rfind("neg:", 0) == 0) {
        scale = -1;
        name = name.substr(4);
    } else if (auto x = name.find("x:"); x != std::string::npos && x > 0 &&
                                         name.find_first_not_of("0123456789") == x) {
        scale = std::stoll(name.substr(0, x));
        name = name.substr(x + 2);
    }
    long long modulus = modulus_override;
    std::string path = name;
    if (const CocycleInfo* info = find_builtin_cocycle(name)) {
        path = data_dir() + "/cocycles/" + info->file;
        if (modulus < 0) modulus = info->modulus;
        Quandle expected = parse_quandle_spec(info->quandle);
        if (!(expected == q))
            throw std::invalid_argument("cocycle " + name + " lives on " + info->quandle + ", not " + q.label());
    } else if (modulus < 0) {
        throw std::invalid_argument("loading a cocycle file requires an explicit coefficient order");
    }
    Cochain c = parse_cocycle_file(path, q, modulus);
    if (scale != 1) c = c.scaled(scale);
    if (!is_cocycle(q, c)) throw std::invalid_argument(name_or_path + " is not a cocycle over the given coefficients");
    return c;
}

inline Cochain zero_cochain(const Quandle& q, int degree, long long modulus) {
    return Cochain(TupleBasis(q.order(), degree), modulus);
}

}  // namespace qlab
