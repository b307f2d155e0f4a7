/* Copyright (c) 2026 Mathal Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

// Umbrella header: the whole library in one include.

#ifndef MATHAL_MATHAL_HPP
#define MATHAL_MATHAL_HPP

#include "mathal/buckwalter.hpp"
#include "mathal/detector.hpp"
#include "mathal/eval.hpp"
#include "mathal/lexicon.hpp"
#include "mathal/masker.hpp"
#include "mathal/normalize.hpp"
#include "mathal/serialize.hpp"
#include "mathal/similarity.hpp"
#include "mathal/unicode.hpp"

#endif  // MATHAL_MATHAL_HPP
