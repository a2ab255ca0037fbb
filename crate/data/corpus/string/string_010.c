int main()
{
    char buf[256], c;
    int i, j;
    scanf("%s", buf);
    for (i = 0, j = strlen(buf) - 1; i < j; i++, j--) {
        c = buf[i];
        buf[i] = buf[j];
        buf[j] = c;
    }
    puts(buf);
    return 0;
}
