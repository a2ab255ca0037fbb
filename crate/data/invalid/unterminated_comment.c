/* expect 3:5 */
int x;
    /* never closed
int y;
