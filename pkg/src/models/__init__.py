# Validated value types for fields, ideals, forms, classes and survey rows
