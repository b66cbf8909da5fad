/* Copyright 2026 The MulTypo Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MULTYPO_MULTYPO_HPP_
#define MULTYPO_MULTYPO_HPP_

#include "multypo/corpus.hpp"
#include "multypo/engine.hpp"
#include "multypo/error.hpp"
#include "multypo/event_log.hpp"
#include "multypo/language.hpp"
#include "multypo/layout.hpp"
#include "multypo/lexicon.hpp"
#include "multypo/operations.hpp"
#include "multypo/random.hpp"
#include "multypo/sampling.hpp"
#include "multypo/unicode.hpp"
#include "multypo/validator.hpp"

#endif  // MULTYPO_MULTYPO_HPP_
