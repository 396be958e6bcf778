#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "eomt/errors.hpp"

namespace eomt::cli {

// 17 significant digits, locale independent, byte stable across runs.
inline std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc())
        throw numerical_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

} // namespace eomt::cli
