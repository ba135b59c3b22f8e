//! Set partitions of `{1..n}`, their types, Faà di Bruno coefficients,
//! complete Bell polynomials and intersection matrices.

mod enumerate;
mod imatrix;
mod kinds;
mod types;

pub(crate) use enumerate::next_permutation;
pub use enumerate::{
    enumerate_ordered_partitions, enumerate_ordered_partitions_within, enumerate_partitions,
    enumerate_partitions_within, OrderedSetPartitions, SetPartitions,
};
pub use imatrix::{intersection_matrix, matrix_class, ordered_preimages};
pub use kinds::{
    parse_ordered_partition, parse_set_partition, Blocks, OrderedSetPartition, SetPartition,
};
pub use types::{
    bell_number, complete_bell, faa_di_bruno, type_of, types_of_weight, PartitionType,
};
