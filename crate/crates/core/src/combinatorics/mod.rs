//! Partitions, weighted 7-colored vector partitions and their statistics.

mod counts;
mod partition;
mod vector;

pub use counts::{partition_numbers, parity_weighted, pentagonal_d, weighted_total};
pub use partition::{enumerate, partitions, Partition, PartitionClass, StarPartition};
pub use vector::{
    enumerate_vectors, enumerated_series, for_each_vector, residue_classes, series_counts,
    statistic_distribution, weighted_count, Family, VectorPartition, ENUMERATION_LIMIT,
};
