#ifndef HDNN_HDNN_HPP
#define HDNN_HDNN_HPP

#include "hdnn/classifiers.hpp"
#include "hdnn/dataset.hpp"
#include "hdnn/errors.hpp"
#include "hdnn/evaluation.hpp"
#include "hdnn/metrics.hpp"
#include "hdnn/tables.hpp"

#endif
