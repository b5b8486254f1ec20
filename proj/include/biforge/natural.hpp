// Copyright 2026 The Biforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIFORGE_NATURAL_HPP_
#define BIFORGE_NATURAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace biforge {

// Arbitrary-precision integer. Values of the standard model are naturals;
// the signed type is shared with the linear arithmetic of the decision
// procedure, where negative coefficients and constants occur.
using Integer = boost::multiprecision::cpp_int;
using Natural = Integer;

}  // namespace biforge

#endif  // BIFORGE_NATURAL_HPP_
