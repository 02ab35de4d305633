/*
 * Copyright 2026 The mumorank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <mumorank/bounds.hpp>
#include <mumorank/commands.hpp>
#include <mumorank/config.hpp>
#include <mumorank/csv.hpp>
#include <mumorank/errors.hpp>
#include <mumorank/graphs.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/json_writer.hpp>
#include <mumorank/pagerank.hpp>
#include <mumorank/preference.hpp>
#include <mumorank/solver.hpp>
#include <mumorank/types.hpp>
#include <mumorank/walker.hpp>
