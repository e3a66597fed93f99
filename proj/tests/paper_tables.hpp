#ifndef HDNN_TESTS_PAPER_TABLES_HPP
#define HDNN_TESTS_PAPER_TABLES_HPP

// Published accuracy grid for the Hassanat-metric runs across the 28
// benchmark datasets, transcribed as CSV. Used as a fixed input for the
// stability-analysis mechanics.
inline constexpr const char* kPublishedHassanatAccuracyCsv =
    "dataset,1NN,3NN,5NN,7NN,9NN,sqrtnNN,IINC,ENN\n"
    "Australian,0.82,0.86,0.87,0.87,0.86,0.86,0.86,0.87\n"
    "Balance,0.82,0.82,0.83,0.85,0.86,0.88,0.89,0.86\n"
    "Banknote,1.00,1.00,1.00,1.00,1.00,0.99,1.00,1.00\n"
    "BCW,0.96,0.97,0.97,0.97,0.96,0.96,0.96,0.97\n"
    "Cancer,0.97,0.97,0.97,0.97,0.97,0.97,0.97,0.97\n"
    "Diabetes,0.67,0.70,0.71,0.73,0.73,0.75,0.72,0.73\n"
    "EEG,0.97,0.97,0.96,0.95,0.95,0.86,0.94,0.93\n"
    "German,0.68,0.72,0.73,0.73,0.74,0.73,0.72,0.75\n"
    "Glass,0.68,0.68,0.65,0.66,0.66,0.66,0.69,0.70\n"
    "Haberman,0.65,0.70,0.71,0.71,0.72,0.72,0.72,0.71\n"
    "Heart,0.79,0.80,0.82,0.83,0.82,0.82,0.82,0.82\n"
    "Ionosphere,0.91,0.91,0.90,0.90,0.91,0.89,0.89,0.90\n"
    "Iris,0.94,0.95,0.95,0.96,0.96,0.95,0.95,0.95\n"
    "Letter rec.,0.95,0.94,0.94,0.94,0.94,0.82,0.95,0.94\n"
    "Liver,0.61,0.65,0.67,0.66,0.66,0.68,0.67,0.67\n"
    "Monkey1,0.78,0.84,0.91,0.94,0.96,0.91,0.92,0.94\n"
    "Parkinson,0.92,0.95,0.96,0.96,0.96,0.97,0.98,0.98\n"
    "Phoneme,0.90,0.89,0.87,0.87,0.87,0.84,0.87,0.87\n"
    "QSAR,0.82,0.84,0.84,0.85,0.84,0.83,0.85,0.85\n"
    "Segmen,0.96,0.95,0.95,0.95,0.95,0.90,0.95,0.95\n"
    "Sonar,0.86,0.84,0.83,0.79,0.75,0.73,0.85,0.86\n"
    "Vehicle,0.66,0.67,0.67,0.67,0.67,0.67,0.68,0.69\n"
    "Vote,0.92,0.92,0.92,0.92,0.92,0.91,0.92,0.93\n"
    "Vowel,0.97,0.92,0.85,0.76,0.69,0.54,0.94,0.94\n"
    "Waveform21,0.75,0.79,0.81,0.82,0.82,0.85,0.83,0.84\n"
    "Waveform40,0.72,0.77,0.79,0.80,0.81,0.84,0.83,0.84\n"
    "Wholesale,0.87,0.88,0.89,0.90,0.90,0.90,0.90,0.89\n"
    "Wine,0.97,0.97,0.96,0.96,0.96,0.96,0.97,0.97\n";

// The published stability summary for the grid above:
// Sum  row: 1NN 1.04, 3NN 0.71, 5NN 0.62, 7NN 0.64, 9NN 0.74,
//           sqrtnNN 1.19, IINC 0.33, ENN 0.28
// Max  row: 1NN 0.18, 3NN 0.12, 5NN 0.12, 7NN 0.21, 9NN 0.28,
//           sqrtnNN 0.43, IINC 0.05, ENN 0.04

#endif
