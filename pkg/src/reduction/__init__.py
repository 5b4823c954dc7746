"""Rankings, Ritt reduction and characteristic sets"""
