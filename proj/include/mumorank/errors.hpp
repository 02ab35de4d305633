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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mumorank {

/**
 * Base class for all library errors.
 */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A file that could not be read or written.
 */
class IoError : public Error {
public:
    using Error::Error;
};

/**
 * Malformed input: bad CSV, bad config document, mismatched shapes.
 */
class SchemaError : public Error {
public:
    using Error::Error;
};

/**
 * A name or index that does not resolve to a declared modality or node.
 */
class LookupError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

/**
 * A structurally broken graph (invariant violations found by validation).
 */
class ValidationError : public Error {
public:
    using Error::Error;
};

/**
 * An iterative solver stopped at max_iterations without meeting tolerance.
 */
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::size_t iterations, double residual)
        : Error(what), iterations(iterations), residual(residual) {}

    std::size_t iterations;
    double residual;
};

/**
 * Inputs that are well-formed but make the requested quantity undefined
 * (empty preferred set, zero-degree preferred set, a modality with no
 * active nodes, division by zero in a bound).
 */
class DegenerateError : public Error {
public:
    using Error::Error;
};

} // namespace mumorank
