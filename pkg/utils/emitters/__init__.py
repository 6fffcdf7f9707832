from .emitters import csv_text, format_value, json_text, to_jsonable, write_csv, write_json

__all__ = ['csv_text', 'format_value', 'json_text', 'to_jsonable', 'write_csv', 'write_json']
