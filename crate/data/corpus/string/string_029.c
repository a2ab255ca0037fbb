int main()
{
    char buf[300];
    char *q;
    scanf("%s", buf);
    for (q = buf; *q; q++)
        if (*q >= 'a' && *q <= 'z')
            *q = *q - 'a' + 'A';
    printf("%s\n", buf);
    return 0;
}
