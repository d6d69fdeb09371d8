// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sparc {

// Base for every failure this library reports deliberately. Callers that
// only need coarse handling (the CLI exit-code mapping) catch this.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A label or relation token that maps to nothing in the vocabulary.
struct UnknownLabelError : Error {
    explicit UnknownLabelError(const std::string& token)
        : Error("unknown label: \"" + token + "\""), token(token) {}
    std::string token;
};

// Two composed pairs whose inner entities do not line up.
struct ChainBreakError : Error {
    using Error::Error;
};

// A relation set or fact base that asserts a statement and its reverse.
struct ContradictionError : Error {
    using Error::Error;
};

// An inequality store update that admits no coordinate model.
struct InconsistencyError : Error {
    using Error::Error;
};

// A story sentence no pattern accepts. Carries the sentence position.
struct UnparseableSentenceError : Error {
    UnparseableSentenceError(std::size_t index, const std::string& sentence)
        : Error("unparseable sentence #" + std::to_string(index) + ": \"" + sentence + "\""),
          index(index),
          sentence(sentence) {}
    std::size_t index;
    std::string sentence;
};

// A JSON record missing required fields or holding the wrong types.
struct SchemaError : Error {
    using Error::Error;
};

// Question endpoints with no connecting statements.
struct NoPathError : Error {
    using Error::Error;
};

// A sampling request larger than the available pool.
struct InsufficientDataError : Error {
    using Error::Error;
};

// A description or pattern asset that is not on disk.
struct MissingAssetError : Error {
    explicit MissingAssetError(const std::string& path)
        : Error("missing asset: " + path), path(path) {}
    std::string path;
};

// File-level read/write failure (distinct from validation for exit codes).
struct IoError : Error {
    using Error::Error;
};

}  // namespace sparc
