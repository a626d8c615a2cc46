#pragma once

// Umbrella header for the channel-comparison toolkit: exact rational
// channels and utilities, policy-space value maximizers, certificate-
// producing order checks, utility-class comparators, and the proof-device
// constructions, all over exact rational arithmetic.

#include <chanorder/channel.hpp>
#include <chanorder/constructions.hpp>
#include <chanorder/fixtures.hpp>
#include <chanorder/io.hpp>
#include <chanorder/lp.hpp>
#include <chanorder/matrix.hpp>
#include <chanorder/orders.hpp>
#include <chanorder/rational.hpp>
#include <chanorder/report.hpp>
#include <chanorder/rng.hpp>
#include <chanorder/suites.hpp>
#include <chanorder/utility_classes.hpp>
#include <chanorder/values.hpp>
