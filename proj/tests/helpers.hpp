// Copyright 2026 The fswapnet developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fswapnet/types.hpp"

namespace fswapnet::test {

inline std::string fixture_dir() {
    if (const char* env = std::getenv("FSWAPNET_FIXTURE_DIR")) return env;
    return FSWAPNET_FIXTURE_DIR;
}

inline std::string fixture(const std::string& name) {
    std::ifstream in(fixture_dir() + "/" + name);
    if (!in) throw Error("missing fixture: " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline InteractionTerm term(TermKind kind, int p, int q, Spin s, Spin s2, double c) {
    InteractionTerm t;
    t.kind = kind;
    t.p = p;
    t.q = q;
    t.spin = s;
    t.spin2 = s2;
    t.coefficient = c;
    return t;
}

}  // namespace fswapnet::test
