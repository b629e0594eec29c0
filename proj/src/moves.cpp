namespace dbraid {}
