// Copyright 2026 The panint Authors
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

#ifndef PANINT_PANINT_HPP
#define PANINT_PANINT_HPP

#include "capacity.hpp"
#include "choquet.hpp"
#include "error.hpp"
#include "lp.hpp"
#include "lp_space.hpp"
#include "numeric.hpp"
#include "pan.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "report.hpp"
#include "space.hpp"
#include "verify.hpp"
#include "witness.hpp"

#endif  // PANINT_PANINT_HPP
