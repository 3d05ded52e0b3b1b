// Copyright 2026 The gbsdeform Authors
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

#ifndef GBS_INDEX_HPP_
#define GBS_INDEX_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbs {

// Edge-end indices. Slide orbits grow geometrically, so fixed-width
// integers are not enough.
using Index = boost::multiprecision::cpp_int;

inline std::string to_string(const Index& i) { return i.str(); }

// Parses '-'? [0-9]+. Returns false on anything else.
bool parse_index(std::string_view text, Index& out);

inline Index abs_index(const Index& i) { return i < 0 ? Index(-i) : i; }

// d | x. d must be nonzero.
inline bool divides(const Index& d, const Index& x) { return x % d == 0; }

Index gcd_index(const Index& a, const Index& b);

}  // namespace gbs

#endif  // GBS_INDEX_HPP_
