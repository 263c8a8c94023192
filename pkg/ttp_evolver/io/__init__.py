"""File formats and persistence"""
from ttp_evolver.io.ttp_format import format_instance, parse_instance, read_instance, write_instance
from ttp_evolver.io.run_records import (
    append_record,
    merge_record_files,
    read_records,
    record_from_result,
    replay_record
)
from ttp_evolver.io.tables import features_frame, item_frame, node_frame, profile_frame, write_csv

__all__ = [
    'format_instance',
    'parse_instance',
    'read_instance',
    'write_instance',
    'append_record',
    'merge_record_files',
    'read_records',
    'record_from_result',
    'replay_record',
    'features_frame',
    'item_frame',
    'node_frame',
    'profile_frame',
    'write_csv'
]
